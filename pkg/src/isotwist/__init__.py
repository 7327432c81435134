"""Isospectral twist products and Rieffel deformations on torus-graded algebras."""
from .errors import DomainError, ParseError, UnsupportedMapError
from .graded import (
    Bidegree,
    Element,
    Generator,
    GeneratorTable,
    Monomial,
    act,
    element_normalize,
    generator_action,
    involution,
    load_table,
    monomial_mul,
    sphere4_table,
    torus_table,
)
from .numeric import (
    GridFunction,
    QuadratureSpec,
    analyze,
    convergence_study,
    grid_rieffel_product,
    regularized_oscillatory_phase,
    synthesize,
)
from .phase import Cyclotomic, exp2pi
from .rieffel import (
    JMap,
    equivalence_check,
    first_order_study,
    poisson_bracket,
    reduced_poisson_bracket,
    rieffel_phase,
    rieffel_product,
)
from .twist import (
    Convention,
    DeformationParams,
    deformed_involution,
    is_central,
    psi_apply,
    sphere_relations,
    torus_relations,
    twist_product,
    twisted_product_via_psi,
)

__version__ = "0.1.0"

__all__ = [
    "Bidegree",
    "Convention",
    "Cyclotomic",
    "DeformationParams",
    "DomainError",
    "Element",
    "Generator",
    "GeneratorTable",
    "GridFunction",
    "JMap",
    "Monomial",
    "ParseError",
    "QuadratureSpec",
    "UnsupportedMapError",
    "act",
    "analyze",
    "convergence_study",
    "deformed_involution",
    "element_normalize",
    "equivalence_check",
    "exp2pi",
    "first_order_study",
    "generator_action",
    "grid_rieffel_product",
    "involution",
    "is_central",
    "load_table",
    "monomial_mul",
    "poisson_bracket",
    "psi_apply",
    "reduced_poisson_bracket",
    "regularized_oscillatory_phase",
    "rieffel_phase",
    "rieffel_product",
    "sphere4_table",
    "sphere_relations",
    "synthesize",
    "torus_relations",
    "torus_table",
    "twist_product",
    "twisted_product_via_psi",
]
