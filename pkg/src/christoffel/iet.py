"""Symmetric discrete interval exchanges and their word encodings.

A composition (c1,...,cl) of n cuts [n] = {0,...,n-1} into consecutive
intervals I_1,...,I_l with |I_j| = c_j and, reading the sizes backwards,
into J_1,...,J_l with |J_h| = c_{l+1-h}.  The exchange sigma maps each
I_h increasingly onto J_{l+1-h}.  When sigma is a single cycle, reading
off the cycle form that starts at 0 and replacing each element of I_j by
the j-th alphabet letter yields the standard encoding, a perfectly
clustering Lyndon word; conversely every such word arises this way.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .errors import (
    AlphabetSizeMismatchError,
    EmptyCompositionError,
    NotCircularError,
    NotCoprimeError,
    RestrictionOutOfRangeError,
    SizeLimitError,
)
from .permsign import Permutation
from .words import Letter, Word, is_perfectly_clustering, lyndon_words


@dataclass(frozen=True)
class Composition:
    """An l-tuple of nonnegative parts with positive sum; zeros allowed."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts or any(p < 0 for p in parts) or sum(parts) < 1:
            raise EmptyCompositionError(f"invalid composition {list(parts)}")

    @property
    def total(self) -> int:
        return sum(self.parts)

    def interval_starts(self) -> list[int]:
        starts = [0]
        for p in self.parts[:-1]:
            starts.append(starts[-1] + p)
        return starts

    def interval_index(self, x: int) -> int:
        """0-based index j with x in I_{j+1}."""
        acc = 0
        for j, p in enumerate(self.parts):
            acc += p
            if x < acc:
                return j
        raise RestrictionOutOfRangeError(f"{x} outside [{self.total}]")


@dataclass(frozen=True)
class IetPermutation:
    """A symmetric discrete interval exchange with its composition."""

    sigma: Permutation
    composition: Composition


def build_sigma(composition: Composition) -> IetPermutation:
    """The exchange permutation: I_h maps increasingly onto J_{l+1-h}."""
    parts = composition.parts
    n = composition.total
    i_starts = composition.interval_starts()
    j_sizes = parts[::-1]
    j_starts = [0]
    for p in j_sizes[:-1]:
        j_starts.append(j_starts[-1] + p)
    ell = len(parts)
    images = [0] * n
    for h in range(ell):
        target = ell - 1 - h  # J_{l+1-h} holds c_h elements
        for offset in range(parts[h]):
            images[i_starts[h] + offset] = j_starts[target] + offset
    return IetPermutation(Permutation(images), composition)


def is_circular(p: IetPermutation) -> bool:
    """True when the exchange is a single cycle."""
    return p.sigma.cycle_count() == 1


def two_interval_circular(c1: int, c2: int) -> bool:
    """Two-interval criterion: circular iff gcd(c1, c2) = 1."""
    return gcd(c1, c2) == 1


def pak_redlich_circular(c1: int, c2: int, c3: int) -> bool:
    """Three-interval criterion: circular iff gcd(c1+c2, c2+c3) = 1."""
    return gcd(c1 + c2, c2 + c3) == 1


def standard_cycle(p: IetPermutation) -> tuple[int, ...]:
    """Cycle form starting at 0 of a circular exchange."""
    if not is_circular(p):
        raise NotCircularError(f"exchange of {p.composition.parts} is not circular")
    images = p.sigma.images
    cyc = [0]
    x = images[0]
    while x != 0:
        cyc.append(x)
        x = images[x]
    return tuple(cyc)


def standard_encoding(p: IetPermutation, alphabet: Sequence[Letter]) -> Word:
    """Word read off the 0-based cycle form, letter j for elements of I_j."""
    if len(alphabet) != len(p.composition.parts):
        raise AlphabetSizeMismatchError(
            f"{len(alphabet)} letters for {len(p.composition.parts)} parts")
    comp = p.composition
    return Word(alphabet[comp.interval_index(x)] for x in standard_cycle(p))


def cycle_encodings(p: IetPermutation, alphabet: Sequence[Letter]) -> list[Word]:
    """The n encodings from the n cycle forms; a full conjugacy class."""
    if len(alphabet) != len(p.composition.parts):
        raise AlphabetSizeMismatchError(
            f"{len(alphabet)} letters for {len(p.composition.parts)} parts")
    comp = p.composition
    cyc = standard_cycle(p)
    letters = [alphabet[comp.interval_index(x)] for x in cyc]
    return [Word(letters[i:] + letters[:i]) for i in range(len(letters))]


def cyclic_restriction(p: IetPermutation, k: int) -> IetPermutation:
    """Restriction of a circular two-interval exchange to {0,...,k-1}.

    Deleting the elements >= k from the cycle form of the exchange with
    composition (gamma, rho) leaves the exchange with composition
    (gamma-i, i, rho-i), i = n-k; the two constructions are computed
    independently and must agree.
    """
    if len(p.composition.parts) != 2:
        raise RestrictionOutOfRangeError("cyclic restriction needs a two-interval exchange")
    gamma, rho = p.composition.parts
    if gcd(gamma, rho) != 1:
        raise NotCoprimeError(f"gcd{(gamma, rho)} != 1")
    n = gamma + rho
    i = n - k
    if not 0 <= i <= min(gamma, rho):
        raise RestrictionOutOfRangeError(
            f"restriction to [{k}] outside range for composition {(gamma, rho)}")
    survivors = [x for x in standard_cycle(p) if x < k]
    images = [0] * k
    for idx, x in enumerate(survivors):
        images[x] = survivors[(idx + 1) % len(survivors)]
    restricted = Permutation(images)
    by_composition = build_sigma(Composition((gamma - i, i, rho - i)))
    assert restricted == by_composition.sigma, (gamma, rho, k)
    return by_composition


def restriction_word_chain(gamma: int, rho: int,
                           alphabet: Sequence[Letter] = (0, 1, 2),
                           ) -> list[tuple[Word, int | None]]:
    """Encodings of the successive restrictions, with their merge positions.

    Starting from the two-letter word of composition (gamma, rho) with
    gamma < rho, each step replaces one factor "ac" by "b"; the position
    recorded with step i is (i*gamma^{-1} mod n) - d_i where d_i counts
    the earlier removals landing below the current one.
    """
    if gcd(gamma, rho) != 1:
        raise NotCoprimeError(f"gcd{(gamma, rho)} != 1")
    if not 0 < gamma <= rho:
        raise RestrictionOutOfRangeError(f"need 0 < gamma <= rho, got {(gamma, rho)}")
    if len(alphabet) != 3:
        raise AlphabetSizeMismatchError("restriction chain needs a three-letter alphabet")
    n = gamma + rho
    gamma_inv = pow(gamma, -1, n)
    marks = [(j * gamma_inv) % n for j in range(1, gamma + 1)]
    chain: list[tuple[Word, int | None]] = []
    for i in range(gamma + 1):
        word = standard_encoding(
            build_sigma(Composition((gamma - i, i, rho - i))), alphabet)
        if i == 0:
            chain.append((word, None))
        else:
            d = sum(1 for j in range(i) if marks[j] < marks[i - 1])
            chain.append((word, marks[i - 1] - d))
    return chain


def enumerate_pc_words(length: int, num_letters: int,
                       alphabet: Sequence[Letter] | None = None) -> list[Word]:
    """All perfectly clustering Lyndon words of the given length.

    Computed two ways and cross-checked: by filtering Lyndon words with
    the Burrows-Wheeler last-column test, and by encoding every circular
    composition of the length into ``num_letters`` parts (zeros allowed).
    """
    if num_letters not in (2, 3):
        raise SizeLimitError(f"alphabet size {num_letters} not supported")
    if not 1 <= length <= 18:
        raise SizeLimitError(f"length {length} outside [1, 18]")
    if alphabet is None:
        alphabet = tuple(range(num_letters))
    if len(alphabet) != num_letters:
        raise AlphabetSizeMismatchError(
            f"{len(alphabet)} letters for alphabet size {num_letters}")

    filtered = {w for w in lyndon_words(length, alphabet)
                if is_perfectly_clustering(w)}

    encoded = set()
    for parts in _compositions(length, num_letters):
        exchange = build_sigma(Composition(parts))
        if is_circular(exchange):
            encoded.add(standard_encoding(exchange, alphabet))

    if filtered != encoded:
        raise AssertionError(
            f"enumeration mismatch at length {length}: "
            f"{sorted(filtered - encoded)} vs {sorted(encoded - filtered)}")
    return sorted(filtered)


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail
