"""Exact computations with BiHom-Lie colour algebras over the rationals.

The package builds graded algebras with two commuting structure maps,
verifies their axiom suites with explicit witnesses, twists them by
morphisms and multipliers, and solves the associated linear problems
(cohomology, derivations, centroids) in exact arithmetic.
"""

from .algebra import (
    AxiomReport,
    CheckItem,
    ColourAlgebra,
    Witness,
    check_associative_axioms,
    check_bihom_axioms,
    check_lie_axioms,
    require_passing,
)
from .alg_io import ParseError, parse_algebra, serialize_algebra
from .cohomology import (
    Cochain,
    CohomologyResult,
    Representation,
    adjoint_rep,
    apply_coboundary,
    coboundary_matrix,
    cochain_basis,
    cohomology_dims,
    dual_rep,
    validate_representation,
)
from .constructions import (
    CORPUS_NAMES,
    build_osp12,
    commutator_algebra,
    corpus,
    mat2_assoc,
    osp12_classical,
    yau_twist,
    z2z2_colour_example,
    zero_algebra,
)
from .derivations import (
    HomEndo,
    SolverResult,
    centroid_space,
    check_jordan_axioms,
    derivation_space,
    generalized_derivation_space,
    inner_derivation_space,
    jordan_product,
    quasi_centroid_space,
    quasi_derivation_space,
)
from .grading import (
    Bicharacter,
    GradedBasis,
    GradingGroup,
    parse_degree,
    parse_group,
    super_bicharacter,
    trivial_bicharacter,
)
from .linalg import Matrix
from .multipliers import (
    MultiplierTable,
    delta_twist,
    multiplier_from_omega,
    sigma_twist,
    validate_multiplier,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomReport",
    "Bicharacter",
    "CheckItem",
    "Cochain",
    "CohomologyResult",
    "ColourAlgebra",
    "CORPUS_NAMES",
    "GradedBasis",
    "GradingGroup",
    "HomEndo",
    "Matrix",
    "MultiplierTable",
    "ParseError",
    "Representation",
    "SolverResult",
    "Witness",
    "adjoint_rep",
    "apply_coboundary",
    "build_osp12",
    "centroid_space",
    "check_associative_axioms",
    "check_bihom_axioms",
    "check_jordan_axioms",
    "check_lie_axioms",
    "coboundary_matrix",
    "cochain_basis",
    "cohomology_dims",
    "commutator_algebra",
    "corpus",
    "delta_twist",
    "derivation_space",
    "dual_rep",
    "generalized_derivation_space",
    "inner_derivation_space",
    "jordan_product",
    "mat2_assoc",
    "multiplier_from_omega",
    "osp12_classical",
    "parse_algebra",
    "parse_degree",
    "parse_group",
    "quasi_centroid_space",
    "quasi_derivation_space",
    "require_passing",
    "serialize_algebra",
    "sigma_twist",
    "super_bicharacter",
    "trivial_bicharacter",
    "validate_multiplier",
    "validate_representation",
    "yau_twist",
    "z2z2_colour_example",
    "zero_algebra",
]
