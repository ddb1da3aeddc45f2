"""Exact verification of symplectic residue identities for Higgs-bundle
section data on the projective line.

Everything is computed over the Gaussian rationals with canonical-form
rational functions, so every identity check is an exact equality.  The
hot arithmetic kernels have a compiled backend with a pure-Python
fallback; ``higgsres.KERNEL_BACKEND`` tells which one is active.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .curve import CurveReport, MarkedCurve, curve_validate
from .errors import (
    DegeneratePairing,
    EmptySpace,
    EquivarianceBroken,
    HiggsresError,
    Infeasible,
    IrregularSection,
    NotInAlgebra,
    NotInvertible,
    ParseError,
    RegularityViolation,
    ShapeError,
    UnsupportedDenominator,
    ValidationError,
    ZeroDenominator,
)
from .field import (
    GaussRat,
    Jet2,
    LaurentSeries,
    Poly,
    RatFunc,
    format_gauss,
    laurent_expand,
    parse_gauss,
    parse_ratfunc,
    rat_normalize,
)
from .hamiltonian import (
    HamiltonianRep,
    SymplecticSpace,
    XVector,
    builtin_rep,
    dmoment,
    inf_action,
    moment,
    rep_validate,
)
from .lie import (
    CoadjointElement,
    LoopAlgebraElement,
    LoopGroupElement,
    MatrixLieAlgebra,
    bracket,
    coadjoint_transition,
    dualize,
    elementary,
    pairing,
    torus,
)
from .moduli import (
    HiggsPoint,
    ambient_higgs_tangent,
    HiggsTangent,
    YPoint,
    YTangent,
    cartan_check,
    gauge_transform_y_point,
    gauge_transform_y_tangent,
    higgs_from_y,
    identity_check,
    liouville_lambda,
    make_higgs_point,
    make_higgs_tangent,
    make_y_point,
    make_y_tangent,
    pullback_omega,
    pushforward_tangent,
    symplectic_omega,
)
from .residues import (
    INFINITY,
    OneForm,
    P1Point,
    local_coordinate,
    localize,
    residue,
    residue_sum,
)
from .scenario import Scenario, load_scenario, parse_scenario
from .solver import (
    CocycleRecipe,
    GdotRecipe,
    SeedStream,
    SolverBounds,
    build_higgs_field_space,
    build_higgs_tangent_space,
    build_section_space,
    build_tangent_space,
    nullspace,
    sample,
    sample_affine,
    sample_vector,
)

__version__ = "0.1.0"
