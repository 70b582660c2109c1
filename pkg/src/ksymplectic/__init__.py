"""Exact linear algebra of k-symplectic vector spaces.

All arithmetic is over :class:`fractions.Fraction`; every check is an exact
equality.
"""
from .errors import (
    BadDimension,
    ComplementFailed,
    ConstructionIncomplete,
    DegenerateCommonKernel,
    DimensionError,
    InvariantBroken,
    KSymplecticError,
    LevelError,
    MismatchedK,
    NotClosed,
    NotIsomorphism,
    NotIsotropic,
    NotPolarized,
    NotSkew,
    PreconditionFailed,
    SchemaError,
    SingularPhi,
    VariableMismatch,
)
from .linalg import (
    ONE,
    RationalMatrix,
    Subspace,
    ZERO,
    contains,
    dot,
    format_rational,
    kernel,
    membership,
    parse_rational,
    rref,
    subspace_equal,
    subspace_intersection,
    subspace_sum,
    to_fraction,
    unit_vector,
    vector,
)
from .kspace import (
    FIXTURES,
    KSymplecticSpace,
    canonical_model,
    congruent,
    eval_form,
    fixture,
    new_kspace,
    product_ominus,
    r3_2symp,
    r6_2symp,
    r6_5symp,
    random_invertible,
    random_kspace,
    space_from_json,
    space_to_json,
    wedge,
    x_subspace,
    y_subspace,
)
from .subspaces import (
    Lagrangian,
    SubspaceClassification,
    Verdict,
    classify,
    is_complement,
    is_l_coisotropic,
    is_l_isotropic,
    is_l_lagrangian,
    isotropic_complement,
    kernel_sum,
    l_orthogonal,
    lagrangian_completion,
)
from .darboux import (
    DarbouxFrame,
    GraphCheck,
    check_polarization,
    darboux_map,
    find_polarization,
    graph_check,
    graph_subspace,
    is_ksymplectomorphism,
    phi_matrix,
    transport_polarization,
)
from .forms import (
    Poly,
    PolyOneForm,
    PolySection,
    canonical_two_form,
    compose_hamiltonian,
    d1,
    exterior_derivative,
    hamilton_jacobi_check,
    hamilton_jacobi_check_section,
    is_closed_section,
    p_var,
    p_vars,
    potential,
    pullback_omega,
    q_vars,
    random_poly,
    random_section,
    section_from_potentials,
    two_form_is_zero,
)

__version__ = "0.1.0"

__all__ = [
    "BadDimension",
    "ComplementFailed",
    "ConstructionIncomplete",
    "DarbouxFrame",
    "DegenerateCommonKernel",
    "DimensionError",
    "FIXTURES",
    "GraphCheck",
    "InvariantBroken",
    "KSymplecticError",
    "KSymplecticSpace",
    "Lagrangian",
    "LevelError",
    "MismatchedK",
    "NotClosed",
    "NotIsomorphism",
    "NotIsotropic",
    "NotPolarized",
    "NotSkew",
    "ONE",
    "Poly",
    "PolyOneForm",
    "PolySection",
    "PreconditionFailed",
    "RationalMatrix",
    "SchemaError",
    "SingularPhi",
    "Subspace",
    "SubspaceClassification",
    "VariableMismatch",
    "Verdict",
    "ZERO",
    "canonical_model",
    "canonical_two_form",
    "check_polarization",
    "classify",
    "compose_hamiltonian",
    "congruent",
    "contains",
    "d1",
    "darboux_map",
    "dot",
    "eval_form",
    "exterior_derivative",
    "find_polarization",
    "fixture",
    "format_rational",
    "graph_check",
    "graph_subspace",
    "hamilton_jacobi_check",
    "hamilton_jacobi_check_section",
    "is_closed_section",
    "is_complement",
    "is_ksymplectomorphism",
    "is_l_coisotropic",
    "is_l_isotropic",
    "is_l_lagrangian",
    "isotropic_complement",
    "kernel",
    "kernel_sum",
    "l_orthogonal",
    "lagrangian_completion",
    "membership",
    "new_kspace",
    "p_var",
    "p_vars",
    "parse_rational",
    "phi_matrix",
    "potential",
    "product_ominus",
    "pullback_omega",
    "q_vars",
    "r3_2symp",
    "r6_2symp",
    "r6_5symp",
    "random_invertible",
    "random_kspace",
    "random_poly",
    "random_section",
    "rref",
    "section_from_potentials",
    "space_from_json",
    "space_to_json",
    "subspace_equal",
    "subspace_intersection",
    "subspace_sum",
    "to_fraction",
    "transport_polarization",
    "two_form_is_zero",
    "unit_vector",
    "vector",
    "wedge",
    "x_subspace",
    "y_subspace",
]
