"""Standardized 2-Krein spaces over finite-dimensional indefinite inner product spaces.

Modules:

* :mod:`twokrein.krein`: signature forms, fundamental symmetries, angular operators
* :mod:`twokrein.twometric`: the 2-form psi, its J-companion, and the axiom checker
* :mod:`twokrein.variation`: 2-variation of paths, BV elements and law checks
* :mod:`twokrein.funcspec`: text format for polynomial paths
* :mod:`twokrein.cli`: command-line driver
"""
from .funcspec import ParseError, PathExpression, parse
from .krein import (
    AngularOperator,
    EquivalenceConstants,
    FundamentalSymmetry,
    KreinError,
    KreinSpace,
    KVector,
    canonical_symmetry,
    equivalence_constants,
    inner,
    j_norm,
    make_space,
    project,
    symmetry_from_angular,
)
from .twometric import (
    AxiomReport,
    StandardizedTwoKrein,
    axiom_report,
    psi,
    psi_j,
    scan_equivalence,
    two_norm_j,
)
from .variation import (
    PolynomialPath,
    bv_element,
    bv_two_norm,
    check_variation_laws,
    estimate_variation,
    krein_variation,
    partial_variations,
)

__version__ = "0.1.0"

__all__ = [
    "AngularOperator", "AxiomReport", "EquivalenceConstants", "FundamentalSymmetry",
    "KVector", "KreinError", "KreinSpace", "ParseError", "PathExpression", "PolynomialPath",
    "StandardizedTwoKrein", "axiom_report", "bv_element", "bv_two_norm", "canonical_symmetry",
    "check_variation_laws", "equivalence_constants", "estimate_variation", "inner", "j_norm",
    "krein_variation", "make_space", "parse", "partial_variations", "project", "psi", "psi_j",
    "scan_equivalence", "symmetry_from_angular", "two_norm_j",
]
