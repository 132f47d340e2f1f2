"""Exact combinatorial Lefschetz numbers on unions of open simplices."""
from .chains import (
    ChainSystem,
    VertexSelfMap,
    betti,
    boundary_system,
    homology_lefschetz,
    hopf_lefschetz,
    induced_chain_map,
)
from .complex import (
    CellSet,
    Complex,
    Subdivision,
    barycentric_subdivide,
    build_complex,
    cellset_algebra,
    closure,
    decompose_triple,
    euler_comb,
    subdivide_cellset,
)
from .engine import (
    ApproximatedMap,
    Certificate,
    CompatibilityReport,
    SelfMapSystem,
    Verdict,
    certify_fixed_point,
    check_compatibility,
    index_via_lambda,
    lambda_comb,
    lambda_comb_additive_check,
    lefschetz,
    quotient_lambda,
    relative_lefschetz,
    restricted_lefschetz,
)
from .errors import (
    ComblefError,
    DomainMismatchError,
    FrontierFixedPointError,
    MalformedSimplexError,
    NotASubcomplexError,
    NotIsolatedError,
    ParseError,
    PreconditionError,
    SimplicialityError,
)
from .torus import (
    NielsenCase,
    OutOfHypothesisWarning,
    TorusMapMatrix,
    torus_lefschetz,
    torus_nielsen,
    triad_bound_via_lambda,
    triad_lower_bound,
)
from .unbounded import (
    CompactifiedSystem,
    SpaceClass,
    SpaceTag,
    certify_extension_fixed_point,
    certify_unbounded,
    index_at_infinity,
    lambda_comb_unbounded,
    one_point_compactify,
)

__version__ = "0.1.0"
