"""Brute-force cross-checks for the closed formulas.

Each oracle avoids the code path it checks: orbit counting never looks at a
Smith form, the character oracle never forms an exterior power, and the
fixed-point oracle only takes a determinant.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Any

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .action import ActionData, is_fixed, torus_fixed_points
from .errors import DomainError, InternalConsistencyError, OracleRefusal
from .groups import RjVector, compute_r, conjugacy_classes, r_closed_form_k1
from .linalg import cyclotomic, determinant, poly_pow_coefficient

STATE_LIMIT = 10 ** 7
# Orbit graphs up to this size are enumerated outright; a modulus-doubling
# self-check runs when the doubled space also fits.
FULL_ENUMERATION_LIMIT = 10 ** 6


@dataclass(frozen=True)
class OracleOutcome:
    name: str
    expected: Any
    actual: Any

    @property
    def agree(self) -> bool:
        return self.expected == self.actual

    def to_json(self) -> dict:
        return {"name": self.name, "expected": _jsonable(self.expected),
                "actual": _jsonable(self.actual), "agree": self.agree}


def _jsonable(x):
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    return x


def _count_orbits(a: ActionData, modulus: int) -> tuple[int, np.ndarray]:
    """Connected components of (Z/modulus)^n under u -> u + (I - rho) e_i.

    Returns the component count and the component label of every state
    (states encoded as base-``modulus`` integers, coordinate 0 least
    significant).
    """
    n = a.n
    size = modulus ** n
    states = np.arange(size, dtype=np.int64)
    digits = [(states // modulus ** i) % modulus for i in range(n)]
    src, dst = [], []
    for i in range(n):
        shift = [((1 if r == i else 0) - a.rho[r, i]) % modulus for r in range(n)]
        target = np.zeros(size, dtype=np.int64)
        for r in range(n):
            target += ((digits[r] + shift[r]) % modulus) * modulus ** r
        src.append(states)
        dst.append(target)
    src = np.concatenate(src)
    dst = np.concatenate(dst)
    graph = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(size, size))
    count, labels = connected_components(graph, directed=False)
    return count, labels


def _encode(u, modulus: int) -> int:
    return sum((x % modulus) * modulus ** i for i, x in enumerate(u))


def oracle_conjugacy_by_orbits(a: ActionData, modulus: int | None = None,
                               method: str = "auto") -> int:
    """Number of conjugacy classes of order-p subgroups, by orbit counting.

    Conjugating u*s by v in Z^n gives (u + (I - rho) v)*s, so classes are the
    orbits of these translations. Since p kills coker(rho - I), reducing mod
    any multiple of p loses nothing. ``method`` is ``"enumerate"`` (orbits
    on (Z/modulus)^n), ``"snf"`` (coset enumeration) or ``"auto"``.
    """
    modulus = a.p ** (a.k + 1) if modulus is None else modulus
    if modulus % a.p:
        raise DomainError(f"modulus {modulus} must be a multiple of p = {a.p}")
    size = modulus ** a.n
    if method == "auto":
        method = "enumerate" if size <= FULL_ENUMERATION_LIMIT else "snf"

    if method == "enumerate":
        if size > STATE_LIMIT:
            raise OracleRefusal(f"(Z/{modulus})^{a.n} has {size} states, limit {STATE_LIMIT}")
        count, labels = _count_orbits(a, modulus)
        doubled = (2 * modulus) ** a.n
        if doubled <= FULL_ENUMERATION_LIMIT:
            again, _ = _count_orbits(a, 2 * modulus)
            if again != count:
                raise InternalConsistencyError(
                    f"orbit count unstable: {count} at modulus {modulus}, {again} at {2 * modulus}")
        # SNF representatives must land in pairwise distinct orbits
        hit = {int(labels[_encode(rep.u, modulus)]) for rep in conjugacy_classes(a)}
        if len(hit) != count:
            raise InternalConsistencyError(
                f"{len(hit)} distinct orbits hit by representatives, {count} orbits total")
        return count

    if method == "snf":
        expected = 1
        for d in a.snf_of_rho_minus_id.diagonal:
            expected *= d
        if expected > STATE_LIMIT:
            raise OracleRefusal(f"{expected} cosets exceed the limit {STATE_LIMIT}")
        return len({rep.u for rep in conjugacy_classes(a)})

    raise DomainError(f"unknown method {method!r}")


def oracle_r_by_characters(a: ActionData) -> RjVector:
    """r_j as the average trace of Lambda^j over the group.

    The eigenvalues of rho^a (a != 0) are the primitive p-th roots of unity,
    each k times, so tr Lambda^j(rho^a) = (-1)^j [x^(n-j)] Phi_p(x)^k for
    every a != 0, while a = 0 contributes C(n, j).
    """
    phi = cyclotomic(a.p)
    values = []
    for j in range(a.n + 1):
        trace = (-1) ** j * poly_pow_coefficient(phi, a.k, a.n - j)
        q, rem = divmod(comb(a.n, j) + (a.p - 1) * trace, a.p)
        if rem:
            raise InternalConsistencyError(f"character average not integral at j={j}")
        values.append(q)
    return RjVector(tuple(values))


def oracle_fixed_point_count(a: ActionData) -> int:
    """|det(rho - I)|, checked against p^k and the enumerated fixed points."""
    count = abs(determinant(a.rho_minus_id))
    points = torus_fixed_points(a)
    if count != a.num_classes:
        raise InternalConsistencyError(f"|det(rho - I)| = {count}, expected {a.num_classes}")
    if len(points) != count or len(set(points)) != count:
        raise InternalConsistencyError(f"{len(points)} fixed points enumerated, expected {count}")
    if not all(is_fixed(a, pt) for pt in points):
        raise InternalConsistencyError("an enumerated point is not fixed by rho")
    return count


def oracle_closed_form_vs_exterior(a: ActionData) -> list[OracleOutcome]:
    """Per-degree comparison of the exterior-power r_j with the character
    average and, when k = 1, the closed form."""
    exterior = compute_r(a)
    characters = oracle_r_by_characters(a)
    out = []
    for j in range(a.n + 1):
        out.append(OracleOutcome(f"r_{j} exterior vs characters", characters[j], exterior[j]))
        if a.k == 1:
            out.append(OracleOutcome(f"r_{j} exterior vs closed form",
                                     r_closed_form_k1(a.p, j), exterior[j]))
    return out


def run_all(a: ActionData) -> list[OracleOutcome]:
    """Every oracle for one action, as outcomes."""
    out = oracle_closed_form_vs_exterior(a)
    out.append(OracleOutcome("fixed point count", a.num_classes, oracle_fixed_point_count(a)))
    out.append(OracleOutcome("conjugacy classes by orbits", a.num_classes,
                             oracle_conjugacy_by_orbits(a)))
    return out
