"""Structure sets of B(Gamma) and of the torus bundle M = T^n x_{Z/p} S^l,
and the census of detecting invariants for M."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .abelian import Coefficients, FgAbGroup, LocalizedModule
from .action import ActionData
from .errors import DomainError, InternalConsistencyError
from .groups import RjVector, SubgroupClassRep, compute_r, conjugacy_classes
from .ltheory import l_of_Z, l_sum, rep_ring_rank


@dataclass(frozen=True)
class ManifoldParams:
    """The action together with the (odd, >= 3) sphere dimension l.

    Formulas only see l through the parity of d = (n + l + 1) / 2.
    """

    action: ActionData
    l: int

    def __post_init__(self) -> None:
        if isinstance(self.l, bool) or not isinstance(self.l, int):
            raise DomainError(f"l must be an integer, got {self.l!r}")
        if self.l < 3 or self.l % 2 == 0:
            raise DomainError(f"l must be an odd integer >= 3, got {self.l}")

    @property
    def dim(self) -> int:
        return self.action.n + self.l

    @property
    def d(self) -> int:
        return (self.action.n + self.l + 1) // 2

    @property
    def rho_sign(self) -> int:
        return -1 if self.d % 2 else 1


@dataclass(frozen=True)
class SplittingRow:
    """Splitting obstruction along the subtorus T^J x pt, valued in L_|J|(Z)."""

    subset: tuple[int, ...]
    group: FgAbGroup

    @property
    def vacuous(self) -> bool:
        return self.group.is_trivial


@dataclass(frozen=True)
class RhoRow:
    """Target of the rho-invariant difference for one conjugacy class (P)."""

    subgroup: SubgroupClassRep
    target: LocalizedModule


@dataclass(frozen=True)
class DetectionReport:
    splitting_entries: tuple[SplittingRow, ...]
    rho_entries: tuple[RhoRow, ...]
    sigma_geo_codomain: FgAbGroup
    structure_set: FgAbGroup
    free_rank_audit: int

    @property
    def nontrivial_splitting(self) -> list[SplittingRow]:
        return [row for row in self.splitting_entries if not row.vacuous]


def _free_part(a: ActionData) -> int:
    return a.num_classes * (a.p - 1) // 2


def sper_of_BGamma(a: ActionData, m: int) -> LocalizedModule:
    """Periodic simple structure set of B(Gamma) in degree m."""
    rank = _free_part(a) if m % 2 else 0
    return LocalizedModule(Coefficients.Z_INV_P, rank, (), a.p)


def sper_of_M(mp: ManifoldParams, r: RjVector | None = None) -> FgAbGroup:
    """Periodic simple structure set of M in degree n + l + 1."""
    a = mp.action
    r = compute_r(a) if r is None else r
    return FgAbGroup.free(_free_part(a)) + l_sum(a.n, r.values)


def sgeo_of_M(mp: ManifoldParams, r: RjVector | None = None) -> FgAbGroup:
    """Geometric simple structure set of M. Same sum as the periodic one
    with the i = n term left out."""
    a = mp.action
    r = compute_r(a) if r is None else r
    return FgAbGroup.free(_free_part(a)) + l_sum(a.n, r.values[:a.n])


def sigma_geo_codomain(mp: ManifoldParams, r: RjVector | None = None) -> FgAbGroup:
    a = mp.action
    r = compute_r(a) if r is None else r
    return l_sum(a.n, r.values[:a.n])


def splitting_census(mp: ManifoldParams) -> list[SplittingRow]:
    """One row per nonempty J in {1..n}, ordered by size then lexicographically."""
    n = mp.action.n
    rows = []
    for size in range(1, n + 1):
        group = l_of_Z(size)
        for subset in combinations(range(1, n + 1), size):
            rows.append(SplittingRow(subset, group))
    return rows


def rho_targets(mp: ManifoldParams) -> list[RhoRow]:
    a = mp.action
    rank = rep_ring_rank(a.p, mp.rho_sign)
    target = LocalizedModule(Coefficients.Z_INV_P, rank, (), a.p)
    return [RhoRow(rep, target) for rep in conjugacy_classes(a)]


def detection_report(mp: ManifoldParams) -> DetectionReport:
    a = mp.action
    r = compute_r(a)
    structure = sgeo_of_M(mp, r)
    audit = _free_part(a) + sum(r[i] for i in range(a.n) if (a.n - i) % 4 == 0)
    if structure.free_rank != audit:
        raise InternalConsistencyError(f"free rank {structure.free_rank} != audit {audit}")
    return DetectionReport(
        splitting_entries=tuple(splitting_census(mp)),
        rho_entries=tuple(rho_targets(mp)),
        sigma_geo_codomain=sigma_geo_codomain(mp, r),
        structure_set=structure,
        free_rank_audit=audit,
    )
