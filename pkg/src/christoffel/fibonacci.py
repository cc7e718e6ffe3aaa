"""Fibonacci specialization of the determinantal-vector machinery.

The chain of lower Christoffel words for the slope [0;1,1,1,...] obeys
w_nu = w_{nu-1} w_{nu-2} for even nu and w_nu = w_{nu-2} w_{nu-1} for
odd nu, seeded so that w_0 = 01; then |w_nu| = F_{nu+3},
|w_nu|_0 = F_{nu+2} and |w_nu|_1 = F_{nu+1}.  The determinantal vectors
take Fibonacci values, and the global sign reduces to the parity of the
permutation x -> F_{m-2} x of Z / F_m Z, whose cycle type has a closed
form by residue class of m.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import IndexTooSmallError, OutOfRangeError
from .permsign import Permutation
from .words import Word


def fib(m: int) -> int:
    """Fibonacci number with F_1 = F_2 = 1; F_0 = 0 and F_{-1} = 1 admitted."""
    if m < -1:
        raise OutOfRangeError(f"F_{m} not supported")
    if m == -1:
        return 1
    a, b = 1, 0  # F_{-1}, F_0
    for _ in range(m):
        a, b = b, a + b
    return b


def lucas(m: int) -> int:
    """Lucas number with L_0 = 2, L_1 = 1."""
    if m < 0:
        raise OutOfRangeError(f"L_{m} not supported")
    a, b = 2, 1
    for _ in range(m):
        a, b = b, a + b
    return a


def fib_word_chain(count: int) -> list[Word]:
    """First ``count`` chain words 01, 001, 00101, 00100101, ...

    Concatenation order alternates with the parity of the index; the
    seeds are the single letters 1 and 0, which makes every chain word a
    lower Christoffel word of the Fibonacci slope.
    """
    if count < 1:
        raise OutOfRangeError("count must be >= 1")
    prev2, prev1 = Word((1,)), Word((0,))
    out = []
    for nu in range(count):
        w = prev1 + prev2 if nu % 2 == 0 else prev2 + prev1
        out.append(w)
        prev2, prev1 = prev1, w
    return out


@dataclass(frozen=True)
class FibPrediction:
    """Composition, alphabet and admissible values of a Fibonacci V_n."""

    n: int
    nu: int
    i: int
    composition: tuple[int, int, int]
    alphabet: tuple[int, int, int]
    values: tuple[int, ...]


def fib_detvec_prediction(n: int) -> FibPrediction:
    """Closed-form shape of the n-th Fibonacci determinantal vector.

    nu is fixed by F_{nu+2} <= n <= F_{nu+3} - 1 and i = F_{nu+3} - 1 - n.
    For even nu the composition is (F_{nu+1}-i, i, F_{nu+2}-i) over
    {-F_nu, -F_{nu-2}, F_{nu-1}}; for odd nu it is
    (F_{nu+2}-i, i, F_{nu+1}-i) over {-F_{nu-1}, F_{nu-2}, F_nu}.  The
    absolute values are {F_nu, F_{nu-1}} at the boundary n = F_{nu+3}-1
    and {F_nu, F_{nu-1}, F_{nu-2}} inside.
    """
    if n < 2:
        raise OutOfRangeError("prediction defined for n >= 2")
    nu = 1
    while not fib(nu + 2) <= n <= fib(nu + 3) - 1:
        nu += 1
    i = fib(nu + 3) - 1 - n
    if nu % 2 == 0:
        composition = (fib(nu + 1) - i, i, fib(nu + 2) - i)
        alphabet = (-fib(nu), -fib(nu - 2), fib(nu - 1))
    else:
        composition = (fib(nu + 2) - i, i, fib(nu + 1) - i)
        alphabet = (-fib(nu - 1), fib(nu - 2), fib(nu))
    if i == 0:
        values = (fib(nu), fib(nu - 1))
    else:
        values = (fib(nu), fib(nu - 1), fib(nu - 2))
    return FibPrediction(n, nu, i, composition, alphabet, values)


_SIGN_PLUS = frozenset({1, 2, 3, 4, 9, 11})


def fib_sign(m: int) -> tuple[int, dict[int, int]]:
    """Sign and cycle type of multiplication by F_{m-2} on Z / F_m Z.

    Closed form: for m = 0 mod 4 the type is 1^(L_{m/2}) 2^rest, for
    m = 2 mod 4 it is 1^(F_{m/2}) 2^rest, for m = 1, 5 mod 6 it is
    1^1 4^((F_m-1)/4), for m = 3 mod 6 it is 1^2 4^((F_m-2)/4); the sign
    is +1 exactly when m mod 12 is one of 1, 2, 3, 4, 9, 11.  Both are
    checked against the actual permutation before returning.
    """
    if m < 3:
        raise IndexTooSmallError("defined for m >= 3")
    f_m = fib(m)
    if m % 4 == 0:
        fixed = lucas(m // 2)
        cycle_type = {1: fixed, 2: (f_m - fixed) // 2}
    elif m % 2 == 0:
        fixed = fib(m // 2)
        cycle_type = {1: fixed, 2: (f_m - fixed) // 2}
    elif m % 6 == 3:
        cycle_type = {1: 2, 4: (f_m - 2) // 4}
    else:
        cycle_type = {1: 1, 4: (f_m - 1) // 4}
    cycle_type = {length: mult for length, mult in cycle_type.items() if mult}
    sign = 1 if m % 12 in _SIGN_PLUS else -1

    actual = Permutation.multiplication(fib(m - 2), f_m)
    assert actual.cycle_type() == cycle_type, (m, cycle_type, actual.cycle_type())
    assert actual.sign() == sign, (m, sign)
    return sign, cycle_type


def gcd_lemma_check(k: int) -> tuple[bool, bool, bool | None]:
    """The three gcd identities used by the sign computation.

    gcd(F_{6k+1}-1, F_{6k+3}) = 2 and gcd(F_{6k+3}-1, F_{6k+5}) = 1 for
    k >= 0; gcd(F_{6k-1}-1, F_{6k+1}) = 1 for k >= 1 (None below that).
    """
    if k < 0:
        raise OutOfRangeError("k must be >= 0")
    a = gcd(fib(6 * k + 1) - 1, fib(6 * k + 3)) == 2
    b = gcd(fib(6 * k + 3) - 1, fib(6 * k + 5)) == 1
    c = gcd(fib(6 * k - 1) - 1, fib(6 * k + 1)) == 1 if k >= 1 else None
    return a, b, c
