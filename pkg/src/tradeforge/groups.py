"""Finite abelian groups in invariant-factor form and their elements."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod


@dataclass(frozen=True, order=True)
class AbelianGroup:
    """Direct sum of cyclic groups Z_d1 + ... + Z_dk with d1 | d2 | ... | dk.

    Each factor is at least 2; the empty factor list is the trivial group.
    """

    factors: tuple

    def __post_init__(self):
        factors = tuple(int(d) for d in self.factors)
        object.__setattr__(self, "factors", factors)
        for d in factors:
            if d < 2:
                raise ValueError(f"invariant factor {d} < 2")
        for x, y in zip(factors, factors[1:]):
            if y % x:
                raise ValueError(f"{x} does not divide {y}")

    @property
    def order(self) -> int:
        return prod(self.factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    def identity(self) -> "GroupElement":
        return GroupElement(self, (0,) * len(self.factors))

    def element(self, coords) -> "GroupElement":
        coords = tuple(int(c) % d for c, d in zip(coords, self.factors))
        if len(coords) != len(self.factors):
            raise ValueError("coordinate length mismatch")
        return GroupElement(self, coords)

    def elements(self):
        """All elements in lexicographic coordinate order."""
        for coords in product(*(range(d) for d in self.factors)):
            yield GroupElement(self, coords)

    def __str__(self):
        if not self.factors:
            return "0"
        return " + ".join(f"Z{d}" for d in self.factors)


@dataclass(frozen=True, order=True)
class GroupElement:
    group: AbelianGroup
    coords: tuple

    def __add__(self, other: "GroupElement") -> "GroupElement":
        if other.group != self.group:
            raise ValueError("elements of different groups")
        return self.group.element(
            a + b for a, b in zip(self.coords, other.coords)
        )

    def __neg__(self) -> "GroupElement":
        return self.group.element(-a for a in self.coords)

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def times(self, k: int) -> "GroupElement":
        return self.group.element(k * a for a in self.coords)

    def is_identity(self) -> bool:
        return not any(self.coords)

    def element_order(self) -> int:
        from math import gcd

        result = 1
        for a, d in zip(self.coords, self.group.factors):
            result = result * (d // gcd(a, d)) // gcd(result, d // gcd(a, d))
        return result

    def __str__(self):
        return "(" + ", ".join(str(a) for a in self.coords) + ")"


def invariant_factor_chains(order: int):
    """All factor tuples (d1, ..., dk) with d1 | d2 | ... and product = order,
    in lexicographic order; order 1 yields the empty tuple."""

    def rec(n, prev):
        if n == 1:
            yield ()
            return
        for f in range(2, n + 1):
            if n % f == 0 and f % prev == 0:
                for tail in rec(n // f, f):
                    yield (f,) + tail

    yield from rec(order, 1)


def groups_of_order(order: int):
    """Abelian groups of the given order, lexicographically least factor list
    first."""
    for chain in sorted(invariant_factor_chains(order)):
        yield AbelianGroup(chain)
