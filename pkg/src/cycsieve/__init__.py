"""Exact q-analogues, necklace orbits, and cyclic sieving checks."""
from __future__ import annotations

from .cherednik import isotypic_hilbert, molchanov_series, rational_q_schroder
from .csp import (
    check_bracelet_csp, check_csp, check_nc_secondary, check_technical_csp, technical_conditions,
)
from .molien import coset_poly_X, molien_series, y_poly, y_zeta_prediction
from .orbits import CosetSpace, DoubleCosetSpace, WordSpace, bracelet_orbits, enumerate_necklaces
from .qpoly import (
    IntPoly, c_alpha, eval_at_root_of_unity, is_palindromic, is_parity_unimodal, q_binomial,
    q_int, q_multinomial,
)
from .symmgrp import (
    Permutation, SubgroupSpec, cyclic_subgroup, is_c_admissible, reflection, rotation,
    symmetric_group, young_subgroup,
)

__version__ = "0.1.0"

__all__ = [
    "IntPoly", "q_int", "q_binomial", "q_multinomial", "c_alpha", "eval_at_root_of_unity",
    "is_palindromic", "is_parity_unimodal",
    "Permutation", "SubgroupSpec", "rotation", "reflection", "young_subgroup", "cyclic_subgroup",
    "symmetric_group", "is_c_admissible",
    "WordSpace", "CosetSpace", "DoubleCosetSpace", "enumerate_necklaces", "bracelet_orbits",
    "molien_series", "coset_poly_X", "y_poly", "y_zeta_prediction",
    "molchanov_series", "isotypic_hilbert", "rational_q_schroder",
    "check_csp", "check_bracelet_csp", "technical_conditions", "check_technical_csp",
    "check_nc_secondary",
]
