"""Invariants of Gamma = Z^n x|_rho Z/p and of the flat torus bundle
M = T^n x_{Z/p} S^l: group theory, L- and Whitehead groups, structure sets."""

from .abelian import FgAbGroup, LocalizedModule
from .action import ActionData, regular_representation_action, torus_fixed_points, validate_action
from .groups import (
    abelianization,
    commutator_rank_check,
    compute_r,
    conjugacy_classes,
    h1,
    r_closed_form_k1,
)
from .linalg import IntMatrix, IntPolynomial, smith_normal_form
from .structure import ManifoldParams, detection_report, sgeo_of_M, sper_of_BGamma, sper_of_M

__all__ = [
    "ActionData",
    "FgAbGroup",
    "IntMatrix",
    "IntPolynomial",
    "LocalizedModule",
    "ManifoldParams",
    "abelianization",
    "commutator_rank_check",
    "compute_r",
    "conjugacy_classes",
    "detection_report",
    "h1",
    "r_closed_form_k1",
    "regular_representation_action",
    "sgeo_of_M",
    "smith_normal_form",
    "sper_of_BGamma",
    "sper_of_M",
    "torus_fixed_points",
    "validate_action",
]
