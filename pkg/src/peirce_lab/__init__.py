"""Exact symbolic toolkit for Peirce polynomials, spectra, symbols, and
fusion tables of commutative nonassociative algebra identities, with
cross-validation on concrete finite-dimensional algebras."""

from .magma import (
    MAX_ENUMERATION_DEGREE,
    Monomial,
    MonomialSyntaxError,
    atom,
    enumerate_monomials,
    format_monomial,
    parse_monomial,
    plenary_power,
    power,
    principal_power,
    product,
)
from .poly import ExactDivisionError, Poly1, Poly3, divide_exact, rational_roots
from .peirce import (
    half_specialization,
    peirce_poly,
    peirce_symbol,
    plenary_peirce_closed,
    plenary_symbol_closed,
    principal_peirce_closed,
    principal_symbol_closed,
    total_peirce_value,
)
from .identities import (
    CatalogParameterError,
    DegenerateIdentity,
    EmptyIdentity,
    FusionTable,
    IdentityTerm,
    IrrationalSpectrum,
    SpectrumReport,
    WeightDescriptor,
    WeightedIdentity,
    ZeroSumViolation,
    baric_weight,
    bilinear_weight,
    catalog,
    catalog_names,
    constant_weight,
    fusion_table,
    identity_from_json,
    identity_peirce_poly,
    identity_symbol,
    identity_to_json,
    make_identity,
    multiply_identities,
    spectrum,
    train_closed_forms,
)
from .algebras import (
    IrrationalEigenvalue,
    PeirceDecomposition,
    StructureAlgebra,
    UnrealizableWeight,
    algebra_from_json,
    algebra_to_json,
    build_algebra,
    builder_names,
    char_poly,
    dimension_constraints_check,
    eigen_decomposition,
    evaluate_monomial,
    fusion_empirical,
    hsiang_tracefree_sym3,
    jordan_sym,
    linearize,
    second_linearization,
    spectrum_inclusion_check,
    spin_factor,
    verify_first_linearization,
    verify_identity,
    verify_second_linearization,
)

__version__ = "1.0.0"
