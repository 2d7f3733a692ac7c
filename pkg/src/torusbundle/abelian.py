"""Finitely generated abelian groups and localized modules as answer types."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Iterable


def invariant_factors(orders: Iterable[int]) -> tuple[int, ...]:
    """Invariant-factor chain of a direct sum of cyclic groups Z/d.

    Uses Z/a + Z/b = Z/gcd(a,b) + Z/lcm(a,b). Orders of 1 vanish.
    """
    ds = sorted(abs(int(d)) for d in orders)
    if any(d == 0 for d in ds):
        raise ValueError("cyclic summand of order 0 is a free summand, not torsion")
    for i in range(len(ds)):
        for j in range(i + 1, len(ds)):
            a, b = ds[i], ds[j]
            g = gcd(a, b)
            ds[i], ds[j] = g, a * b // g
    return tuple(d for d in ds if d > 1)


@dataclass(frozen=True)
class FgAbGroup:
    """Z^free_rank + Z/d_1 + ... + Z/d_r + named finite summands.

    ``invariant_factors`` always form a divisibility chain, so two groups
    without symbolic parts are isomorphic iff they compare equal.
    """

    free_rank: int = 0
    invariant_factors: tuple[int, ...] = ()
    symbolic_summands: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        normalized = invariant_factors(self.invariant_factors)
        object.__setattr__(self, "invariant_factors", normalized)
        object.__setattr__(self, "symbolic_summands", tuple(sorted(self.symbolic_summands)))

    @classmethod
    def from_orders(cls, free_rank: int, orders: Iterable[int] = (),
                    symbolic: Iterable[str] = ()) -> FgAbGroup:
        return cls(free_rank, tuple(orders), tuple(symbolic))

    @classmethod
    def trivial(cls) -> FgAbGroup:
        return cls()

    @classmethod
    def free(cls, r: int) -> FgAbGroup:
        return cls(r)

    @classmethod
    def cyclic(cls, d: int) -> FgAbGroup:
        return cls(1) if d == 0 else cls(0, (d,))

    def __add__(self, other: FgAbGroup) -> FgAbGroup:
        return FgAbGroup(
            self.free_rank + other.free_rank,
            self.invariant_factors + other.invariant_factors,
            self.symbolic_summands + other.symbolic_summands,
        )

    def __mul__(self, times: int) -> FgAbGroup:
        """Direct sum of ``times`` copies."""
        if times < 0:
            raise ValueError("multiplicity must be nonnegative")
        return FgAbGroup(
            self.free_rank * times,
            self.invariant_factors * times,
            self.symbolic_summands * times,
        )

    __rmul__ = __mul__

    @property
    def is_trivial(self) -> bool:
        return not (self.free_rank or self.invariant_factors or self.symbolic_summands)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def torsion_order(self) -> int:
        """Order of the explicit torsion; symbolic summands are not counted."""
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def torsion_multiset(self) -> Counter:
        return Counter(self.invariant_factors)

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.invariant_factors)
        for name, mult in sorted(Counter(self.symbolic_summands).items()):
            parts.append(name if mult == 1 else f"{name}^{mult}")
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {
            "free_rank": self.free_rank,
            "invariant_factors": [str(d) for d in self.invariant_factors],
            "symbolic_summands": list(self.symbolic_summands),
            "text": str(self),
        }

    @classmethod
    def from_json(cls, data: dict) -> FgAbGroup:
        return cls(int(data["free_rank"]),
                   tuple(int(d) for d in data["invariant_factors"]),
                   tuple(data["symbolic_summands"]))


def direct_sum(groups: Iterable[FgAbGroup]) -> FgAbGroup:
    out = FgAbGroup()
    for g in groups:
        out = out + g
    return out


class Coefficients(str, Enum):
    Z = "Z"
    Z_INV_P = "Z_inv_p"
    Z_INV_2 = "Z_inv_2"
    Z_INV_2P = "Z_inv_2p"


@dataclass(frozen=True)
class LocalizedModule:
    """A module over Z, Z[1/p], Z[1/2] or Z[1/2p].

    ``p`` is the prime being inverted by the ``*_p`` coefficient rings and
    is otherwise ignored.
    """

    coefficient: Coefficients
    free_rank: int
    torsion: tuple[int, ...] = ()
    p: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficient", Coefficients(self.coefficient))
        object.__setattr__(self, "torsion", invariant_factors(self.torsion))
        inverted = []
        if self.coefficient in (Coefficients.Z_INV_P, Coefficients.Z_INV_2P):
            if self.p is None:
                raise ValueError("inverting p needs p")
            inverted.append(self.p)
        if self.coefficient in (Coefficients.Z_INV_2, Coefficients.Z_INV_2P):
            inverted.append(2)
        for q in inverted:
            if any(d % q == 0 for d in self.torsion):
                raise ValueError(f"torsion of order divisible by {q} cannot survive inverting {q}")

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def _ring(self) -> str:
        return {
            Coefficients.Z: "Z",
            Coefficients.Z_INV_P: f"Z[1/{self.p}]",
            Coefficients.Z_INV_2: "Z[1/2]",
            Coefficients.Z_INV_2P: f"Z[1/{2 * (self.p or 0)}]",
        }[self.coefficient]

    def __str__(self) -> str:
        ring = self._ring()
        parts = []
        if self.free_rank == 1:
            parts.append(ring)
        elif self.free_rank > 1:
            parts.append(f"{ring}^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {
            "coefficient": self.coefficient.value,
            "p": self.p,
            "free_rank": self.free_rank,
            "torsion": [str(d) for d in self.torsion],
            "text": str(self),
        }

    @classmethod
    def from_json(cls, data: dict) -> LocalizedModule:
        return cls(Coefficients(data["coefficient"]), int(data["free_rank"]),
                   tuple(int(d) for d in data["torsion"]), data["p"])
