"""Exact weight cones, mod-p sections and graded dimensions for the
symplectic zip setting."""

from .cones import (
    GeneratedCone,
    HalfspaceSystem,
    Weight,
    cones_equal_saturated,
    enumerate_lattice_points,
    extreme_rays,
    halfspaces_of,
    monoid_membership,
    saturated_membership,
)
from .catalog import (
    NamedCone,
    catalog_cone,
    cone_GS,
    cone_hw,
    cone_pol,
    cone_schubert,
    cone_schubert_saturated,
    cone_sigma,
    cone_zip_sp4,
    cone_zip_sp4_saturated,
    cone_zip_sp6_saturated,
)
from .errors import (
    EmptyModuleError,
    GuardExceededError,
    InhomogeneousWeightError,
    NotPointedError,
    NotUnipotentInvariantError,
    RankMismatchError,
    TheoremViolationError,
    UndecidedAtBoundError,
    WeightMismatchError,
    ZipconeError,
)
from .fpoly import FpPolynomial, MinorBasis, RationalFunction
from .modules import (
    InducedModule,
    build_module,
    highest_weight_vector,
    intersection_dimension,
    invariants_finite_group,
    subspace_leq0,
    thminter_check,
)
from .rootdata import LeviWeylElement, SymplecticRootDatum, gaussian_binomial
from .sections import (
    GammaMatrix,
    Section,
    TildeSection,
    catalog_section,
    check_equivariance,
    clear_denominators,
    gamma_matrix,
    h0_dimension,
    rzip_sp4_graded_dimension,
    tilde_section,
    tilde_valuation,
    valuation_sign_predict,
)

__version__ = "0.1.0"
