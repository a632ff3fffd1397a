"""Exact curved surface area of a hemiellipsoid frustum.

The closed form combines Appell's F2 with Srivastava's triple series F(3);
``hemifrustum.quadrature`` integrates the defining double integral directly
and serves as the independent check.
"""

from .errors import (ConvergenceError, DivergenceError, DomainError,
                     HemifrustumError, PoleError)
from .geometry import (AREA_F3_PARAMS, THIRD_ARG_SIGN, AreaReport,
                       HemiellipsoidFrustum, PlaneFractions, plane_fractions,
                       star_difference, surface_area_closed,
                       surface_area_term_coefficients, theorem1_angular_integral,
                       theorem2_angular_integral, theorem3_radial_integral)
from .multivar import (AppellF2Args, TripleSeriesParams, appell_f2,
                       check_f3_convergence, lambda_coefficient, srivastava_f3)
from .quadrature import (QuadResult, adaptive_quad_1d,
                         angular_integral_quadrature, radial_integral_quadrature,
                         surface_area_quadrature)
from .series import SeriesResult, TruncationPolicy
from .special import (four_f3_negative_denominator_reduction, gauss_2f1,
                      log_gamma, pfq, pochhammer, sin_cos_moment)

__all__ = [
    "AREA_F3_PARAMS", "THIRD_ARG_SIGN", "AppellF2Args", "AreaReport",
    "ConvergenceError", "DivergenceError", "DomainError", "HemiellipsoidFrustum",
    "HemifrustumError", "PlaneFractions", "PoleError", "QuadResult",
    "SeriesResult", "TripleSeriesParams", "TruncationPolicy", "adaptive_quad_1d",
    "angular_integral_quadrature", "appell_f2", "check_f3_convergence",
    "four_f3_negative_denominator_reduction", "gauss_2f1", "lambda_coefficient",
    "log_gamma", "pfq", "plane_fractions", "pochhammer",
    "radial_integral_quadrature", "sin_cos_moment", "srivastava_f3",
    "star_difference", "surface_area_closed", "surface_area_quadrature",
    "surface_area_term_coefficients", "theorem1_angular_integral",
    "theorem2_angular_integral", "theorem3_radial_integral",
]
