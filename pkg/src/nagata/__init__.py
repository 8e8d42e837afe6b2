"""Exact symbolic toolkit for Nagata-type polynomial maps of Q[x,y,z]."""

from .classify import (
    Classification,
    Verdict,
    classify,
    leading_minor_closed_forms,
    leading_minors,
    wild_by_leading_form,
)
from .lojasiewicz import DeformationReport, LojReport, deformation_compare, loj_exponent
from .maps import (
    AutomorphyResult,
    JacobianReport,
    MilnorCertificate,
    NagataMap,
    PolyEndo,
    build_nagata,
    compose,
    decompose,
    inverse_nagata,
    is_automorphism,
    jacobian,
    jacobian_det,
    jacobian_report,
    milnor_certificate,
    pde_residual,
)
from .parse import (
    ParseError,
    UnknownIdentifierError,
    parse_poly2,
    parse_poly3,
    print_canonical,
)
from .pde import (
    ComponentResidual,
    DEFAULT_DEGREE_BOUND,
    KernelOracleResult,
    SolutionBasis,
    check_homogeneous_split,
    degree_monomials,
    invariant_monomials,
    kernel_oracle,
    solution_basis,
    verify_basis_against_oracle,
)
from .poly import (
    NEG_INFINITY,
    Poly,
    RING2,
    RING3,
    T1,
    T2,
    X,
    Y,
    Z,
    expand_bivariate,
)
from .randgen import random_poly2, random_poly3

__all__ = [
    "AutomorphyResult",
    "Classification",
    "ComponentResidual",
    "DEFAULT_DEGREE_BOUND",
    "DeformationReport",
    "JacobianReport",
    "KernelOracleResult",
    "LojReport",
    "MilnorCertificate",
    "NEG_INFINITY",
    "NagataMap",
    "ParseError",
    "Poly",
    "PolyEndo",
    "RING2",
    "RING3",
    "SolutionBasis",
    "T1",
    "T2",
    "UnknownIdentifierError",
    "Verdict",
    "X",
    "Y",
    "Z",
    "build_nagata",
    "check_homogeneous_split",
    "classify",
    "compose",
    "decompose",
    "deformation_compare",
    "degree_monomials",
    "expand_bivariate",
    "invariant_monomials",
    "inverse_nagata",
    "is_automorphism",
    "jacobian",
    "jacobian_det",
    "jacobian_report",
    "kernel_oracle",
    "leading_minor_closed_forms",
    "leading_minors",
    "loj_exponent",
    "milnor_certificate",
    "parse_poly2",
    "parse_poly3",
    "pde_residual",
    "print_canonical",
    "random_poly2",
    "random_poly3",
    "solution_basis",
    "verify_basis_against_oracle",
    "wild_by_leading_form",
]
