"""Exact calculus of linear canonical relations.

Canonical relations between symplectic vector spaces over the rationals
or a prime field: composition with its transversality calculus,
coisotropic reduction, closure-criterion composition, reduction
sequences, and the simplicial structure on tuples of endorelations.
All arithmetic is exact.
"""

from .linalg import (
    CanrelError,
    FieldMismatch,
    Fp,
    GF,
    Matrix,
    ParametricSubspace,
    QQ,
    QT,
    RatFunc,
    ShapeMismatch,
    Subspace,
    UnsupportedField,
    field_from_spec,
    limit_subspace,
)
from .symplectic import (
    EnumerationUnsupported,
    LagGrassmannian,
    NotSymplectic,
    SymplecticSpace,
    bar,
    classify,
    enumerate_lagrangians,
    lagrangian_count,
    product,
    random_lagrangian,
    standard_space,
    symp_orthogonal,
)
from .relations import (
    CanonicalRelation,
    NotLagrangian,
    TransversalityReport,
    compose,
    cotangent_lift,
    graph_of_symplectomorphism,
    identity_relation,
    lagrangian_as_relation,
    liftlike_core,
    make_relation,
    random_relation,
    transversality,
)
from .reduction import (
    Factorization,
    NotCoisotropic,
    ReductionData,
    compose_via_reduction,
    factorize,
    reduce_lagrangian,
    reduce_space,
)
from .closure import (
    ClosureLimitReport,
    ClosureTriple,
    ParametricRelation,
    closure_limit_check,
    in_closure,
    sabot_compose,
)
from .sequences import (
    EquivalenceResult,
    RewriteStep,
    WWSequence,
    concat,
    equivalent_bounded,
    greedy_reduce,
    rel_value,
    successors,
)
from .nerve import (
    NerveTuple,
    SimplicialIdentityReport,
    check_simplicial_identities,
    degeneracy,
    face,
    is_completely_transversal,
    random_tuple,
)

__version__ = "0.1.0"

__all__ = [
    "CanrelError", "FieldMismatch", "ShapeMismatch", "UnsupportedField",
    "Fp", "RatFunc", "QQ", "QT", "GF", "field_from_spec",
    "Matrix", "Subspace", "ParametricSubspace", "limit_subspace",
    "NotSymplectic", "EnumerationUnsupported", "SymplecticSpace",
    "standard_space", "bar", "product", "symp_orthogonal", "classify",
    "LagGrassmannian", "lagrangian_count", "enumerate_lagrangians",
    "random_lagrangian",
    "NotLagrangian", "CanonicalRelation", "make_relation",
    "identity_relation", "compose", "TransversalityReport",
    "transversality", "graph_of_symplectomorphism",
    "lagrangian_as_relation", "cotangent_lift", "liftlike_core",
    "random_relation",
    "NotCoisotropic", "ReductionData", "reduce_space", "reduce_lagrangian",
    "Factorization", "factorize", "compose_via_reduction",
    "ClosureTriple", "in_closure", "sabot_compose", "ParametricRelation",
    "ClosureLimitReport", "closure_limit_check",
    "WWSequence", "concat", "rel_value", "greedy_reduce", "RewriteStep",
    "successors", "EquivalenceResult", "equivalent_bounded",
    "NerveTuple", "face", "degeneracy", "is_completely_transversal",
    "random_tuple", "SimplicialIdentityReport", "check_simplicial_identities",
    "__version__",
]
