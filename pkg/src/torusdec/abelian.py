"""Finite abelian groups as multisets of cyclic factor orders.

Isomorphism is decided through invariant factors computed with gcd/lcm
swaps alone, so no integer factorization is ever needed on this path and
factors of size q**n cost only gcd time.
"""

from __future__ import annotations

import math
from typing import Iterable

__all__ = ["AbelianGroup", "invariant_factors", "is_isomorphic", "order"]


class AbelianGroup:
    """Direct product of cyclic groups, stored as a sorted factor tuple.

    Factors equal to 1 are dropped on construction (Z_1 terms are
    isomorphism-invisible); the trivial group has an empty tuple.
    Instances are immutable and safe to share between threads.
    """

    __slots__ = ("factors",)

    def __init__(self, factors: Iterable[int] = ()):
        kept = []
        for f in factors:
            f = int(f)
            if f < 1:
                raise ValueError(f"cyclic factor orders must be >= 1, got {f}")
            if f > 1:
                kept.append(f)
        self.factors: tuple[int, ...] = tuple(sorted(kept))

    def order(self) -> int:
        return order(self)

    def invariant_factors(self) -> list[int]:
        return invariant_factors(self)

    def is_isomorphic(self, other: "AbelianGroup") -> bool:
        return is_isomorphic(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AbelianGroup):
            return NotImplemented
        return self.factors == other.factors

    def __hash__(self) -> int:
        return hash(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __repr__(self) -> str:
        return f"AbelianGroup({list(self.factors)!r})"

    def __str__(self) -> str:
        if not self.factors:
            return "Z1"
        return " x ".join(f"Z{f}" for f in self.factors)


def order(g: AbelianGroup) -> int:
    """Product of the cyclic factor orders; 1 for the trivial group."""
    return math.prod(g.factors)


def invariant_factors(g: AbelianGroup) -> list[int]:
    """The unique divisibility chain d_1 | d_2 | ... | d_k, each >= 2.

    Repeatedly replaces a non-dividing pair (a, b) by (gcd, lcm).  Every
    swap strictly decreases the smaller member, so the loop terminates;
    once all pairs divide, the sorted multiset is the canonical chain.
    """
    values = [f for f in g.factors]
    changed = True
    while changed:
        changed = False
        values.sort()
        for i in range(len(values)):
            for j in range(i + 1, len(values)):
                a, b = values[i], values[j]
                if b % a:
                    common = math.gcd(a, b)
                    values[i] = common
                    values[j] = a // common * b
                    changed = True
    return [v for v in sorted(values) if v > 1]


def is_isomorphic(g1: AbelianGroup, g2: AbelianGroup) -> bool:
    """True iff both groups reduce to the same invariant factor list."""
    return invariant_factors(g1) == invariant_factors(g2)
