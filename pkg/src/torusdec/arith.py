"""Signed arbitrary-precision integer helpers for the veq = eps*q convention.

All quantities are plain Python ints, so there is no overflow at any
magnitude; orders of size about q**n stay exact for arbitrarily large n.
Following the usual convention, gcd and lcm of nonzero integers are
normalized to be positive, while everything else stays fully signed and
absolute values are taken only when a number becomes a group order.

q is deliberately not validated as a prime power here: every formula in
this package is purely arithmetic and meaningful for any integer q >= 2.
The CLI offers a strict mode that does reject non-prime-powers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable

from .errors import InternalConsistencyError

__all__ = [
    "VeqTerm",
    "check_eqab",
    "exact_div",
    "gcd_all",
    "lcm_all",
    "veq_pow_minus_one",
]


def _validated(xs: Iterable[int], name: str) -> list[int]:
    values = [int(x) for x in xs]
    if not values:
        raise ValueError(f"{name} requires at least one integer")
    if any(x == 0 for x in values):
        raise ValueError(f"{name} is undefined for zero entries")
    return values


def gcd_all(xs: Iterable[int]) -> int:
    """Positive gcd of a nonempty list of nonzero integers."""
    return math.gcd(*_validated(xs, "gcd_all"))


def lcm_all(xs: Iterable[int]) -> int:
    """Positive lcm of a nonempty list of nonzero integers.

    Computed as iterated |a*b| / gcd(a, b), so no factorization happens.
    """
    values = _validated(xs, "lcm_all")
    return reduce(lambda a, b: abs(a * b) // math.gcd(a, b), values[1:], abs(values[0]))


def exact_div(numerator: int, denominator: int) -> int:
    """Signed division that must leave no remainder.

    Used where divisibility is a theorem; a failure is a bug, so it raises
    InternalConsistencyError rather than a user-facing error.
    """
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise InternalConsistencyError(
            f"{numerator} is not divisible by {denominator}"
        )
    return quotient


@dataclass(frozen=True)
class VeqTerm:
    """The signed quantity (eps*q)**k - 1."""

    q: int
    eps: int
    k: int
    value: int


def veq_pow_minus_one(q: int, eps: int, k: int) -> VeqTerm:
    """Build (eps*q)**k - 1; negative exactly when eps = -1 and k is odd."""
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")
    if eps not in (1, -1):
        raise ValueError(f"eps must be +1 or -1, got {eps}")
    if k < 1:
        raise ValueError(f"exponent must be positive, got {k}")
    return VeqTerm(q, eps, k, (eps * q) ** k - 1)


def check_eqab(q: int, eps: int, a: int, b: int) -> bool:
    """Self-test predicate: |gcd(veq**a - 1, veq**b - 1)| = |veq**(a,b) - 1|.

    The identity holds up to sign for every q >= 2, so this is expected to
    return True always; it exists to be swept exhaustively in tests.
    """
    lhs = gcd_all(
        [veq_pow_minus_one(q, eps, a).value, veq_pow_minus_one(q, eps, b).value]
    )
    rhs = abs(veq_pow_minus_one(q, eps, math.gcd(a, b)).value)
    return lhs == rhs
