"""Validated Z/p-actions on Z^n and the fixed points of the induced torus action."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import (
    DimensionMismatch,
    EvenP,
    InternalConsistencyError,
    NonPrimeP,
    NotFree,
    WrongOrder,
    is_prime,
)
from .linalg import (
    IntMatrix,
    SnfDecomposition,
    char_poly,
    cyclotomic,
    determinant,
    smith_normal_form,
)


@dataclass(frozen=True)
class ActionData:
    """A free (away from the origin) action of Z/p on Z^n, generator ``rho``.

    Only build this through :func:`validate_action`.
    """

    p: int
    n: int
    k: int
    rho: IntMatrix
    rho_minus_id: IntMatrix
    snf_of_rho_minus_id: SnfDecomposition

    @property
    def num_classes(self) -> int:
        """p^k, the size of H^1 and of the set of order-p subgroup classes."""
        return self.p ** self.k


@dataclass(frozen=True)
class TorusFixedPoint:
    """A point of R^n / Z^n fixed by rho, coordinates in [0, 1)."""

    coordinates: tuple[Fraction, ...]

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coordinates) + ")"


def _check_p(p: int) -> None:
    if isinstance(p, bool) or not isinstance(p, int):
        raise NonPrimeP(f"p must be an odd prime, got {p!r}")
    if not is_prime(p):
        raise NonPrimeP(f"p must be an odd prime, got {p}")
    if p == 2:
        raise EvenP("p must be an odd prime, got 2")


def validate_action(p: int, rho: IntMatrix) -> ActionData:
    """Check the standing hypotheses on (p, rho) and derive k with n = k(p-1).

    Freeness of Z/p on Z^n - {0} is tested as det(rho - I) != 0: for prime p
    every nontrivial power generates the group, so a nonzero vector fixed by
    some power is fixed by rho itself.
    """
    _check_p(p)
    if not rho.is_square:
        raise DimensionMismatch(f"rho must be square, got {rho.rows}x{rho.cols}")
    n = rho.rows
    ident = IntMatrix.identity(n)
    if not (rho ** p).is_identity():
        raise WrongOrder(f"rho^{p} is not the identity")
    if rho == ident:
        raise WrongOrder("rho is the identity; the action must be nontrivial")
    rmi = rho - ident
    det = determinant(rmi)
    if det == 0:
        raise NotFree("det(rho - I) = 0: rho fixes a nonzero vector, so the action is not free")
    if n % (p - 1):
        raise DimensionMismatch(f"n = {n} is not divisible by p - 1 = {p - 1}")
    k = n // (p - 1)
    if char_poly(rho) != cyclotomic(p) ** k:
        raise InternalConsistencyError(
            f"char poly of rho is {char_poly(rho)}, expected Phi_{p}^{k}")
    if abs(det) != p ** k:
        raise InternalConsistencyError(f"|det(rho - I)| = {abs(det)}, expected {p}^{k}")
    return ActionData(p=p, n=n, k=k, rho=rho, rho_minus_id=rmi,
                      snf_of_rho_minus_id=smith_normal_form(rmi))


def regular_representation_action(p: int) -> IntMatrix:
    """Multiplication by the generator t on Z[Z/p]/(norm) in the basis
    1, t, ..., t^(p-2); this is the companion matrix of the cyclotomic
    polynomial."""
    return IntMatrix.companion(cyclotomic(p))


def _frac_mod1(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def torus_fixed_points(a: ActionData) -> list[TorusFixedPoint]:
    """All x in R^n/Z^n with rho x = x, i.e. (rho - I) x in Z^n.

    With U (rho - I) V = D, the solutions are x = V w with w_i in (1/d_i) Z,
    taken modulo Z^n.
    """
    snf = a.snf_of_rho_minus_id
    ds = snf.diagonal
    v = snf.v
    points = []
    for c in product(*(range(d) for d in ds)):
        w = [Fraction(ci, di) for ci, di in zip(c, ds)]
        x = tuple(_frac_mod1(xi) for xi in v.apply(w))
        points.append(TorusFixedPoint(x))
    points.sort(key=lambda pt: pt.coordinates)
    return points


def is_fixed(a: ActionData, point: TorusFixedPoint) -> bool:
    image = a.rho.apply(point.coordinates)
    return all((y - x).denominator == 1 for x, y in zip(point.coordinates, image))
