"""L-groups, Whitehead groups and representation-ring ranks in closed form.

All L-groups here are 4-periodic in the degree, so degrees may be any
integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb

from .abelian import FgAbGroup, direct_sum
from .action import ActionData
from .errors import DomainError, UnsupportedDecoration, is_prime
from .groups import RjVector, compute_r


class Ring(str, Enum):
    Z = "Z"
    Z_OF_ZN = "Z_of_Zn"
    Z_OF_ZP = "Z_of_Zp"
    Z_OF_GAMMA = "Z_of_Gamma"


class Decoration(str, Enum):
    S = "s"
    H = "h"
    P = "p"
    MINUS_I = "minus_i"
    MINUS_INFINITY = "minus_infinity"


@dataclass(frozen=True)
class LGroupTableEntry:
    ring_label: Ring
    decoration: Decoration
    m: int
    value: FgAbGroup


def _check_odd_prime(p: int) -> None:
    if not is_prime(p) or p == 2:
        raise DomainError(f"p must be an odd prime, got {p}")


def l_of_Z(m: int) -> FgAbGroup:
    """Z, 0, Z/2, 0 for m = 0, 1, 2, 3 mod 4 (signature/8 and Arf invariant)."""
    return (FgAbGroup.free(1), FgAbGroup(), FgAbGroup.cyclic(2), FgAbGroup())[m % 4]


def l_sum(m: int, multiplicities) -> FgAbGroup:
    """The direct sum over i of L_{m-i}(Z) ** multiplicities[i]."""
    return direct_sum(l_of_Z(m - i) * c for i, c in enumerate(multiplicities))


def l_of_Zn(m: int, n: int) -> FgAbGroup:
    """L_m(Z[Z^n]) = sum_i L_{m-i}(Z)^C(n,i); independent of decoration."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    return l_sum(m, [comb(n, i) for i in range(n + 1)])


def l_of_Zp_decorated(m: int, p: int, decoration: Decoration | str) -> FgAbGroup:
    """L_m(Z[Z/p]) for the decorations <0> = p, <-i> and <-infinity>, which all
    agree because the negative K-groups of Z[Z/p] vanish."""
    _check_odd_prime(p)
    decoration = Decoration(decoration)
    if decoration in (Decoration.S, Decoration.H):
        raise UnsupportedDecoration(
            f"L^{decoration.value}(Z[Z/p]) has no closed form here; use p, minus_i or minus_infinity")
    if m % 2:
        return FgAbGroup()
    return FgAbGroup.free((p - 1) // 2) + l_of_Z(m)


def reduced_ls_of_ZP(m: int, p: int) -> FgAbGroup:
    """Reduced L^s_m(Z[Z/p]): Z^((p-1)/2) for even m, 0 for odd m."""
    _check_odd_prime(p)
    return FgAbGroup() if m % 2 else FgAbGroup.free((p - 1) // 2)


def ls_of_ZGamma(a: ActionData, m: int, r: RjVector | None = None) -> FgAbGroup:
    """L^s_m(Z Gamma), which also equals the <-infinity> decorated group."""
    r = compute_r(a) if r is None else r
    out = l_sum(m, r.values)
    if m % 2 == 0:
        out = FgAbGroup.free(a.num_classes * (a.p - 1) // 2) + out
    return out


def class_group_token(p: int) -> str:
    return f"C(Z[zeta_{p}])"


def whitehead(a: ActionData, m: int) -> FgAbGroup:
    """Wh_m(Gamma) as the sum over the p^k conjugacy classes of Wh_m(Z/p).

    Wh_1(Z/p) = Z^((p-3)/2), Wh_0(Z/p) is the ideal class group of Z[zeta_p]
    (finite, kept symbolic) and the negative ones vanish.
    """
    count = a.num_classes
    if m >= 2:
        raise DomainError(f"Wh_{m} is not available; only m <= 1 is supported")
    if m == 1:
        return FgAbGroup.free(count * (a.p - 3) // 2)
    if m == 0:
        return FgAbGroup(symbolic_summands=(class_group_token(a.p),) * count)
    return FgAbGroup()


def rep_ring_rank(p: int, sign: int) -> int:
    """Rank of the reduced representation ring R~(Z/p)^{+-1}; (p-1)/2 for both signs."""
    _check_odd_prime(p)
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    return (p - 1) // 2


def l_table(a: ActionData, m_range: range) -> list[LGroupTableEntry]:
    """Every tabulated L-group for each degree in ``m_range``."""
    r = compute_r(a)
    out = []
    for m in m_range:
        out.append(LGroupTableEntry(Ring.Z, Decoration.S, m, l_of_Z(m)))
        out.append(LGroupTableEntry(Ring.Z_OF_ZN, Decoration.S, m, l_of_Zn(m, a.n)))
        out.append(LGroupTableEntry(Ring.Z_OF_ZP, Decoration.MINUS_INFINITY, m,
                                    l_of_Zp_decorated(m, a.p, Decoration.MINUS_INFINITY)))
        out.append(LGroupTableEntry(Ring.Z_OF_GAMMA, Decoration.S, m, ls_of_ZGamma(a, m, r)))
        out.append(LGroupTableEntry(Ring.Z_OF_GAMMA, Decoration.MINUS_INFINITY, m,
                                    ls_of_ZGamma(a, m, r)))
    return out
