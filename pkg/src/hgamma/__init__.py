"""Curves, bases and blossoms for translation-invariant function pairs.

The library models spaces spanned by products of two functions
(gamma1, gamma2) whose argument shift acts as an invertible 2x2 matrix:
polynomials, trigonometric and hyperbolic functions, their discrete
analogues, and exponential-weighted versions.  On top of these it builds
the blossom with a shift parameter h, Bernstein-style bases, control
point curves with recursive evaluation and subdivision, interpolation and
degree elevation, plus a validity checker for the degenerate h values
where the shifted basis loses independence.
"""

from .bernstein import (
    BasisQuery,
    basis_all,
    basis_recurrence,
    degree_elevate,
    dual_control_points,
    gamma_closed_form,
    marsden_coefficients,
    marsden_residual,
    poly_closed_form,
    unity_controls,
)
from .blossom import (
    GnkMatrix,
    HomogCoeffs,
    OnCurve,
    Raw,
    blossom_diagonal_check,
    blossom_from_controls,
    d_pochhammer,
    diagonal_args,
    gnk_expand,
    pairings,
    symmetric_blossom,
    unity_normalizer,
)
from .curves import (
    HGammaCurve,
    SegmentTree,
    Tableau,
    make_interpolating_curve,
    midpoint_subdivision,
    polygon_deviation,
    subdivide,
)
from .errors import (
    ArityMismatch,
    DegenerateConfiguration,
    DependentBasis,
    HGammaError,
    OddArity,
    SingularMatrix,
    UnityUndefined,
    UnsupportedElevation,
    UnsupportedFamily,
)
from .families import (
    FamilySpec,
    check_translation_invariance,
    d_form,
    d_form_generic,
    d_form_pair,
    eval_gamma,
    translation_matrix,
)
from .independence import (
    IndependenceReport,
    eigen2,
    independence_check,
    q_binomial,
    validate_curve_params,
)
from .tolerances import Tolerance, default_tolerance

__version__ = "0.1.0"
