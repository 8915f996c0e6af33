"""Minimal degenerations of affine Grassmannian Schubert varieties and the
Weyl-module computations behind their modular decomposition numbers."""

from .roots import (
    DomainError,
    RootDatum,
    RootVector,
    SpecParseError,
    Weight,
    build_root_datum,
    dominance_leq,
    orbit_size,
    pairing,
    positive_roots,
    type_tables,
)
from .smith import SmithForm, smith_normal_form, weight_lattice_quotient
from .degeneration import (
    Case,
    MinimalDegeneration,
    classify_pair,
    enumerate_minimal_degenerations_below,
    levi_reduce,
)
from .singularity import (
    DecompositionProfile,
    ICPolynomial,
    SingularityClass,
    decomposition_profile,
    equivalence_obstruction,
    ic_polynomial,
    invariants,
    nonsmoothness_certificate,
)
from .weyl_module import (
    decomposition_number_ac,
    freudenthal_multiplicity,
    gram_matrix,
    linkage_bound,
    shapovalov_pair,
)

__version__ = "0.1.0"
