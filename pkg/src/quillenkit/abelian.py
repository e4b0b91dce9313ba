"""Finitely generated abelian groups in invariant-factor form."""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .linalg import IntMatrix, diagonal_entries


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def invariant_factors(orders: Iterable[int]) -> list[int]:
    """Invariant factors (each >= 2, dividing the next) of ``⊕ Z/n_i``.

    Orders equal to 1 are dropped; 0 is not allowed here.
    """
    xs = [abs(int(n)) for n in orders if abs(int(n)) != 1]
    if any(n == 0 for n in xs):
        raise ValueError("use free_rank for infinite cyclic summands")
    xs.sort()
    changed = True
    while changed:
        changed = False
        for i in range(len(xs)):
            for j in range(i + 1, len(xs)):
                a, b = xs[i], xs[j]
                if b % a:
                    xs[i], xs[j] = gcd(a, b), _lcm(a, b)
                    changed = True
        xs = sorted(x for x in xs if x != 1)
    return xs


@dataclass(frozen=True, order=True)
class FGAbelianGroup:
    """``Z^free_rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k`` with ``d_i | d_{i+1}``, ``d_i >= 2``.

    Two values compare equal exactly when the groups are isomorphic.
    """

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free_rank must be nonnegative")
        t = tuple(int(d) for d in self.torsion)
        if any(d < 2 for d in t):
            raise ValueError(f"invariant factors must be >= 2, got {t}")
        if any(t[i + 1] % t[i] for i in range(len(t) - 1)):
            raise ValueError(f"divisibility chain violated: {t}")
        object.__setattr__(self, "torsion", t)

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> "FGAbelianGroup":
        """Canonical form of ``⊕ Z/n_i`` where ``n_i = 0`` means ``Z``."""
        orders = list(orders)
        free = sum(1 for n in orders if n == 0)
        return cls(free, tuple(invariant_factors(n for n in orders if n != 0)))

    @classmethod
    def cokernel(cls, m: IntMatrix) -> "FGAbelianGroup":
        """``Z^rows / m(Z^cols)``."""
        diag = diagonal_entries(m)
        return cls(m.rows - len(diag), tuple(invariant_factors(diag)))

    @classmethod
    def parse(cls, text: str) -> "FGAbelianGroup":
        """Inverse of ``str``: accepts ``0``, ``Z``, ``Z^2 + Z/2 + Z/4``."""
        text = text.strip()
        if text == "0":
            return cls()
        free = 0
        tors = []
        for part in text.split("+"):
            part = part.strip()
            m = re.fullmatch(r"Z(?:\^(\d+))?", part)
            if m:
                free += int(m.group(1) or 1)
                continue
            m = re.fullmatch(r"Z/(\d+)(?:\^(\d+))?", part)
            if not m:
                raise ValueError(f"cannot parse abelian group term {part!r}")
            tors += [int(m.group(1))] * int(m.group(2) or 1)
        return cls(free, tuple(invariant_factors(tors)))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def is_torsion_free(self) -> bool:
        return not self.torsion

    @property
    def order(self) -> int | None:
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    @property
    def exponent(self) -> int | None:
        if self.free_rank:
            return None
        return self.torsion[-1] if self.torsion else 1

    def orders(self) -> list[int]:
        """Cyclic orders with 0 for ``Z``, torsion first."""
        return list(self.torsion) + [0] * self.free_rank

    def __add__(self, other: "FGAbelianGroup") -> "FGAbelianGroup":
        return FGAbelianGroup.from_orders(self.orders() + other.orders())

    def tensor(self, other: "FGAbelianGroup") -> "FGAbelianGroup":
        return FGAbelianGroup.from_orders(
            gcd(a, b) for a in self.orders() for b in other.orders()
        )

    def tor(self, other: "FGAbelianGroup") -> "FGAbelianGroup":
        return FGAbelianGroup.from_orders(
            gcd(a, b) for a in self.torsion for b in other.torsion
        )

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


ZERO = FGAbelianGroup()
Z = FGAbelianGroup(1)


def cyclic(n: int) -> FGAbelianGroup:
    return FGAbelianGroup.from_orders([n])
