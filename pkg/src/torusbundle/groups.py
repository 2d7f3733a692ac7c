"""Group-theoretic invariants of Gamma = Z^n x|_rho Z/p."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import product
from math import comb

from .abelian import FgAbGroup
from .action import ActionData
from .errors import DomainError, InternalConsistencyError, is_prime
from .linalg import (
    IntMatrix,
    cokernel,
    determinant,
    exterior_power,
    fixed_space_dims,
    inverse_unimodular,
    rank,
    rational_kernel_rank,
)


@dataclass(frozen=True)
class SubgroupClassRep:
    """Coset representative u of Z^n / (rho - I) Z^n.

    The class of u corresponds to the conjugacy class of the order-p
    subgroup generated by u*s, where s is the fixed generator of Z/p.
    """

    u: tuple[int, ...]
    label: int


@dataclass(frozen=True)
class RjVector:
    """Ranks r_0, ..., r_n of the rho-fixed parts of the exterior powers of Z^n."""

    values: tuple[int, ...]

    def __getitem__(self, j: int) -> int:
        return self.values[j]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


def elementary_abelian(p: int, k: int) -> FgAbGroup:
    return FgAbGroup.from_orders(0, [p] * k)


def h1(a: ActionData) -> FgAbGroup:
    """H^1(Z/p; Z^n), computed as coker(rho - I)."""
    g = cokernel(a.rho_minus_id)
    if g != elementary_abelian(a.p, a.k):
        raise InternalConsistencyError(f"H^1 = {g}, expected (Z/{a.p})^{a.k}")
    return g


def conjugacy_classes(a: ActionData) -> list[SubgroupClassRep]:
    """Canonical representatives of the p^k classes of order-p subgroups.

    With U (rho - I) V = D, coker(rho - I) is identified with the product of
    Z/d_i through y = U u. Each y_i runs over [0, d_i) and u = U^{-1} y.
    Labels are the mixed-radix index of y.
    """
    snf = a.snf_of_rho_minus_id
    u_inv = inverse_unimodular(snf.u)
    ds = snf.diagonal
    reps = []
    for label, y in enumerate(product(*(range(d) for d in ds))):
        reps.append(SubgroupClassRep(tuple(u_inv.apply(list(y))), label))
    if len(reps) != a.num_classes:
        raise InternalConsistencyError(f"found {len(reps)} classes, expected {a.num_classes}")
    return reps


def abelianization(a: ActionData) -> FgAbGroup:
    g = h1(a) + FgAbGroup.cyclic(a.p)
    if g != elementary_abelian(a.p, a.k + 1):
        raise InternalConsistencyError(f"abelianization {g}, expected (Z/{a.p})^{a.k + 1}")
    return g


def commutator_rank_check(a: ActionData) -> bool:
    """The commutator subgroup im(rho - I) has full rank n."""
    return rank(a.rho_minus_id) == a.n


def compute_r(a: ActionData) -> RjVector:
    """r_j = dim_Q ker(Lambda^j rho - I) for j = 0..n.

    The fixed sublattice of a finite-order integral matrix has the same
    rank as its rational fixed space. Since rho^p = I the kernel ranks are
    taken mod a large prime (see :func:`fixed_space_dims`);
    :func:`fixed_rank_exact` is the literal Bareiss computation.
    """
    det = determinant(a.rho)
    if det != 1:
        raise InternalConsistencyError(f"det rho = {det}, expected 1")
    values = fixed_space_dims(a.rho, a.p)
    if values[0] != 1 or values[-1] != 1:
        raise InternalConsistencyError(f"r_0 and r_n must be 1, got {values}")
    return RjVector(tuple(values))


def fixed_rank_exact(a: ActionData, j: int) -> int:
    wedge = exterior_power(a.rho, j)
    return rational_kernel_rank(wedge - IntMatrix.identity(wedge.rows))


def r_closed_form_k1(p: int, j: int) -> int:
    """r_j for n = p - 1: (C(p-1, j) + (-1)^j (p-1)) / p, and 0 for j >= p."""
    if not is_prime(p) or p == 2:
        raise DomainError(f"p must be an odd prime, got {p}")
    if j < 0:
        raise DomainError("j must be nonnegative")
    if j >= p:
        return 0
    num = comb(p - 1, j) + (-1) ** j * (p - 1)
    q, rem = divmod(num, p)
    if rem:
        raise InternalConsistencyError(f"closed form not integral at p={p}, j={j}")
    return q


def check_palindrome(r: RjVector, a: ActionData) -> bool:
    """r_j == r_{n-j}; only meaningful when det rho = 1, otherwise warns and
    returns True."""
    if determinant(a.rho) != 1:
        warnings.warn("det rho != 1; palindrome check skipped")
        return True
    v = r.values
    return all(v[j] == v[a.n - j] for j in range(a.n + 1))
