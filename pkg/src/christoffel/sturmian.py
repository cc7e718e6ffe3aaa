"""Factor matrices of Sturmian slopes and their determinantal vectors.

For a slope given by a continued-fraction prefix, the semi-convergents
carry a chain of lower Christoffel words w_0 = 01, w_1, w_2, ...; the
distinct factors of length n of the corresponding Sturmian sequence are
the circular factors of the first chain word of length > n.  Stacking
the n+1 factors in decreasing order gives the (n+1) x n matrix G_n, and
the signed maximal minors (-1)^(k-i) det(G_n minus row i) form the
determinantal vector V_n.

V_n is also computable in closed form: with w = w_nu the covering chain
word, N = |w|, i = N-1-n and w = w'w'' the standard factorization, V_n
is the perfectly clustering word of composition (|w''|-i, i, |w'|-i)
over {-|w'|_1, |w''|_1-|w'|_1, |w''|_1}, multiplied by eps*(-1)^t where
eps is the sign of x -> |w|_1 x on Z/NZ and
t = sum_{1<=j<=i} (N - j + d_j - (j q mod N)), q = |w|_0, d_j counting
the earlier removals below the current one.  Successive vectors merge at
the palindromic factorization, up to a global sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .contfrac import ContinuedFraction, semiconvergents
from .errors import (
    AmbiguousSplitError,
    DimensionMismatchError,
    InsufficientCFError,
    NoPalindromicSplitError,
    NotPerfectlyClusteringError,
    OutOfRangeError,
)
from .iet import Composition, build_sigma, standard_encoding
from .numeric import det_int
from .permsign import zolotareff
from .words import (
    Word,
    bw_rows,
    circular_factors,
    lower_christoffel,
    palindromic_factorization,
    standard_factorization,
)


@dataclass(frozen=True)
class SturmianSlope:
    """A Sturmian slope represented by a finite continued-fraction prefix."""

    cf: ContinuedFraction

    @classmethod
    def from_quotients(cls, quotients: Sequence[int]) -> "SturmianSlope":
        return cls(ContinuedFraction(tuple(quotients)))


def christoffel_chain(slope: SturmianSlope, max_len: int) -> list[Word]:
    """Chain words at the semi-convergents, up to the given length.

    The first word is always 01; lengths increase strictly.  A finite
    prefix yields a finite chain; operations that need longer words raise
    InsufficientCFError instead.
    """
    out = []
    for s in semiconvergents(slope.cf):
        w = lower_christoffel(s)
        if len(w) > max_len:
            break
        out.append(w)
    return out


def _full_chain(slope: SturmianSlope) -> list[Word]:
    return [lower_christoffel(s) for s in semiconvergents(slope.cf)]


def _locate(chain: list[Word], n: int) -> int:
    """Least nu with |w_nu| >= n + 1."""
    for nu, w in enumerate(chain):
        if len(w) >= n + 1:
            return nu
    raise InsufficientCFError(
        f"chain ends at length {len(chain[-1]) if chain else 0}; "
        f"extend the continued fraction to cover factor length {n}")


@dataclass(frozen=True)
class FactorMatrix:
    """The n+1 factors of length n, largest row first.

    ``origin`` lists, for each row, the index of the rotation table row
    of the covering chain word whose prefix it is (the first occurrence).
    """

    n: int
    rows: tuple[Word, ...]
    origin: tuple[int, ...]

    def int_rows(self) -> list[list[int]]:
        return [list(r.letters) for r in self.rows]


def _factor_matrix_of_word(w: Word, n: int) -> FactorMatrix:
    table = bw_rows(w)
    rows: list[Word] = []
    origin: list[int] = []
    prev = None
    for idx, row in enumerate(table):
        prefix = row.letters[:n]
        if prefix != prev:
            rows.append(Word(prefix))
            origin.append(idx)
            prev = prefix
    if len(rows) != n + 1:
        raise OutOfRangeError(
            f"{len(rows)} distinct circular factors of length {n} in {w}; expected {n + 1}")
    return FactorMatrix(n, tuple(rows), tuple(origin))


def factor_matrix(slope: SturmianSlope, n: int) -> FactorMatrix:
    """G_n for the given slope."""
    if n < 0:
        raise OutOfRangeError(f"factor length {n} must be >= 0")
    chain = _full_chain(slope)
    w = chain[_locate(chain, n)]
    return _factor_matrix_of_word(w, n)


@dataclass(frozen=True)
class DetContext:
    """Provenance of a closed-form determinantal vector."""

    nu: int
    word_length: int
    i: int
    epsilon: int
    t: int
    composition: tuple[int, ...]
    alphabet: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "nu": self.nu,
            "N": self.word_length,
            "i": self.i,
            "epsilon": self.epsilon,
            "t": self.t,
            "composition": list(self.composition),
            "alphabet": list(self.alphabet),
        }


@dataclass(frozen=True)
class DeterminantalVector:
    """Integer vector of signed maximal minors, with optional provenance."""

    components: tuple[int, ...]
    context: DetContext | None = None

    def as_word(self) -> Word:
        return Word(self.components)

    def __len__(self):
        return len(self.components)

    def to_json_dict(self) -> dict:
        out: dict = {"components": list(self.components)}
        if self.context is not None:
            out["context"] = self.context.to_json_dict()
        return out


def determinantal_vector(rows: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Signed maximal minors of a (k+1) x k integer matrix.

    Component i is (-1)^(k-i) times the determinant of the matrix with
    row i removed; each determinant is computed independently.
    """
    k = len(rows) - 1
    if k < 0 or any(len(r) != k for r in rows):
        raise DimensionMismatchError("need a (k+1) x k matrix")
    out = []
    for i in range(k + 1):
        minor = [list(r) for j, r in enumerate(rows) if j != i]
        d = det_int(minor)
        out.append(d if (k - i) % 2 == 0 else -d)
    return tuple(out)


def determinantal_vector_oracle(matrix: FactorMatrix) -> DeterminantalVector:
    """V_n by brute-force exact determinants of the factor matrix."""
    return DeterminantalVector(determinantal_vector(matrix.int_rows()))


def _chain_step_data(w: Word, i_max: int) -> tuple[list[int], list[int]]:
    """Removal marks jq mod N and merge rows h_j for j = 1..i_max."""
    big_n = len(w)
    q = w.count(0)
    marks = [(j * q) % big_n for j in range(1, i_max + 1)]
    rows = []
    for j in range(1, i_max + 1):
        d = sum(1 for x in marks[:j] if x < marks[j - 1])
        rows.append(marks[j - 1] - d)
    return marks, rows


def determinantal_vector_closed(slope: SturmianSlope, n: int) -> DeterminantalVector:
    """V_n in closed form, exact global sign included."""
    if n < 2:
        raise OutOfRangeError("closed form needs n >= 2; use the oracle below that")
    chain = _full_chain(slope)
    nu = _locate(chain, n)
    w = chain[nu]
    big_n = len(w)
    r = w.count(1)
    i = big_n - 1 - n
    w1, w2 = standard_factorization(w)
    m1, m2 = w1.count(1), w2.count(1)
    lo, mid, hi = -m1, m2 - m1, m2

    epsilon = zolotareff(r, big_n)
    _, merge_rows = _chain_step_data(w, i)
    t = 0
    for j, h in enumerate(merge_rows, start=1):
        t += (big_n - j) - h

    composition = Composition((len(w2) - i, i, len(w1) - i))
    encoded = standard_encoding(build_sigma(composition), (lo, mid, hi))
    sign = epsilon * (1 if t % 2 == 0 else -1)
    components = tuple(sign * x for x in encoded)

    if i == 0:
        ctx_comp: tuple[int, ...] = (len(w2), len(w1))
        ctx_alphabet: tuple[int, ...] = (lo, hi)
    else:
        ctx_comp = composition.parts
        ctx_alphabet = (lo, mid, hi)
    context = DetContext(nu=nu, word_length=big_n, i=i, epsilon=epsilon, t=t,
                         composition=ctx_comp, alphabet=ctx_alphabet)
    return DeterminantalVector(components, context)


@dataclass(frozen=True)
class GChainStep:
    """One matrix of the factor-matrix chain; ``merge_row`` is the h of the
    arrow leading into it (None for the first matrix)."""

    matrix: FactorMatrix
    merge_row: int | None


def g_chain(slope: SturmianSlope, nu: int) -> list[GChainStep]:
    """The chain G_{N-1} -> ... -> G_{L-1} within chain word nu.

    N and L are the lengths of chain words nu and nu-1.  Step i removes
    row h_i = (iq mod N) - d_i; in the previous matrix the rows h_i - 1
    and h_i agree except for final entries 1 and 0, which is verified.
    """
    chain = _full_chain(slope)
    if not 1 <= nu < len(chain):
        raise InsufficientCFError(
            f"chain index {nu} outside [1, {len(chain) - 1}]")
    w = chain[nu]
    big_n = len(w)
    small = len(chain[nu - 1])
    i_max = big_n - small
    _, merge_rows = _chain_step_data(w, i_max)
    steps = [GChainStep(_factor_matrix_of_word(w, big_n - 1), None)]
    for i in range(1, i_max + 1):
        h = merge_rows[i - 1]
        previous = steps[-1].matrix
        top, bottom = previous.rows[h - 1].letters, previous.rows[h].letters
        assert top[:-1] == bottom[:-1] and top[-1] == 1 and bottom[-1] == 0, \
            (w, i, h)
        steps.append(GChainStep(_factor_matrix_of_word(w, big_n - 1 - i), h))
    return steps


def vector_merge_step(v: DeterminantalVector) -> DeterminantalVector:
    """V_{n+1} -> V_n up to a global sign.

    The merge position is the palindromic factorization of the vector
    read as a word: the last component of the first palindrome absorbs
    the first component of the second.
    """
    comps = v.components
    try:
        first, _ = palindromic_factorization(Word(comps))
    except (NoPalindromicSplitError, AmbiguousSplitError) as exc:
        raise NotPerfectlyClusteringError(str(exc)) from exc
    h = len(first)
    merged = comps[:h - 1] + (comps[h - 1] + comps[h],) + comps[h + 1:]
    return DeterminantalVector(merged)


def special_factor_determinant(slope: SturmianSlope, n: int) -> int:
    """Determinant of the n factors of length n without the right-special one.

    Defined in the three-letter range (i >= 1); the value is plus or
    minus the middle alphabet letter, and is returned with the sign the
    exact minor computation produces.
    """
    chain = _full_chain(slope)
    nu = _locate(chain, n)
    w = chain[nu]
    if n >= len(w) - 1:
        raise OutOfRangeError(f"factor length {n} has a two-letter vector; no middle value")
    matrix = _factor_matrix_of_word(w, n)
    longer = {u.letters for u in circular_factors(w, n + 1)}
    special = [idx for idx, u in enumerate(matrix.rows)
               if u.letters + (0,) in longer and u.letters + (1,) in longer]
    assert len(special) == 1, (w, n, special)
    h = special[0]
    rows = matrix.int_rows()
    minor = det_int([row for idx, row in enumerate(rows) if idx != h])
    value = minor if (n - h) % 2 == 0 else -minor
    w1, w2 = standard_factorization(w)
    middle = w2.count(1) - w1.count(1)
    assert abs(value) == abs(middle), (w, n, value, middle)
    return value
