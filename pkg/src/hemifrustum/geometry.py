"""Hemiellipsoid frustum and its closed-form curved surface area.

The surface is z = c sqrt(1 - x^2/a^2 - y^2/b^2) with a >= b > c > 0, cut by
the planes z = h and z = H. Its projection is the annulus between the ellipses
x^2/a^2 + y^2/b^2 = gamma^2 and beta^2, where beta^2 = 1 - H^2/c^2 and
gamma^2 = 1 - h^2/c^2. The area is Phi(gamma) - Phi(beta) with

    Phi(t) = b^2 t^2 pi F2[1; 1/2, -1/2; 1, 2; 1 - b^2/a^2, -c^2 t^2/a^2]
           + b^2 c^2 t^6 pi / (6 a^2) F3[1 - b^2/a^2, t^2, -c^2 t^2/a^2].
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .errors import ConvergenceError, DivergenceError, DomainError, PoleError
from .multivar import AppellF2Args, TripleSeriesParams, appell_f2, srivastava_f3
from .series import DEFAULT_POLICY, SeriesResult, TruncationPolicy
from .special import gauss_2f1, is_nonpositive_integer

# Parameter groups of the triple series in the area formula.
AREA_F3_PARAMS = TripleSeriesParams(
    b_prime=(2, 3), b_dprime=(2,), c=(0.5,), c_prime=(1,), c_dprime=(0.5,),
    g_prime=(4,), h=(1,), h_prime=(2,), h_dprime=(2, 2),
)

# Sign of the third triple-series argument, -c^2 t^2 / a^2. Quadrature
# agrees with -1 to rounding level; +1 is off by 4e-4 on (3, 2, 1, 0.2, 0.6)
# and by 1.3% on (5, 3, 2, 0.3, 0.8).
THIRD_ARG_SIGN = -1


@dataclass(frozen=True)
class HemiellipsoidFrustum:
    """Semi-axes a, b, c and cutting heights h <= H.

    ``h == H`` is accepted as an empty zone of zero area.
    """

    a: float
    b: float
    c: float
    h: float
    H: float

    def __post_init__(self):
        checks = [
            (self.c > 0, "c > 0"),
            (self.a >= self.b, "a >= b"),
            (self.b > self.c, "b > c"),
            (self.h > 0, "h > 0"),
            (self.h <= self.H, "h <= H"),
            (self.H < self.c, "H < c"),
        ]
        for ok, text in checks:
            if not ok:
                raise DomainError(
                    f"frustum requires {text} (a={self.a!r}, b={self.b!r}, "
                    f"c={self.c!r}, h={self.h!r}, H={self.H!r})")

    @classmethod
    def from_plane_fractions(cls, a: float, b: float, c: float, beta: float,
                             gamma: float) -> "HemiellipsoidFrustum":
        if not 0 < beta <= gamma < 1:
            raise DomainError(
                f"plane fractions require 0 < beta <= gamma < 1, got "
                f"beta={beta!r}, gamma={gamma!r}")
        return cls(a, b, c, c * math.sqrt(1 - gamma * gamma),
                   c * math.sqrt(1 - beta * beta))

    def scaled(self, k: float) -> "HemiellipsoidFrustum":
        return HemiellipsoidFrustum(k * self.a, k * self.b, k * self.c,
                                    k * self.h, k * self.H)


@dataclass(frozen=True)
class PlaneFractions:
    beta: float
    gamma: float


@dataclass(frozen=True)
class AreaReport:
    area: float
    f2_term_gamma: float
    f2_term_beta: float
    f3_term_gamma: float
    f3_term_beta: float
    beta: float
    gamma: float
    third_arg_sign: int = THIRD_ARG_SIGN
    diagnostics: dict[str, SeriesResult] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "area": self.area,
            "f2_term_gamma": self.f2_term_gamma,
            "f2_term_beta": self.f2_term_beta,
            "f3_term_gamma": self.f3_term_gamma,
            "f3_term_beta": self.f3_term_beta,
            "beta": self.beta,
            "gamma": self.gamma,
            "third_arg_sign": self.third_arg_sign,
        }


def plane_fractions(frustum: HemiellipsoidFrustum) -> PlaneFractions:
    c = frustum.c
    beta = math.sqrt(1 - (frustum.H / c) ** 2)
    gamma = math.sqrt(1 - (frustum.h / c) ** 2)
    return PlaneFractions(beta, gamma)


def star_difference(phi: Callable[[float], float], gamma: float,
                    beta: float) -> float:
    """phi(gamma) - phi(beta)."""
    return phi(gamma) - phi(beta)


def _scaled(res: SeriesResult, factor: float) -> SeriesResult:
    return SeriesResult(factor * res.value, res.terms_used,
                        abs(factor) * res.error_estimate, res.converged,
                        abs(factor) * res.abs_sum)


def _check_s(s: float) -> None:
    if is_nonpositive_integer(1 + s):
        raise DomainError(f"exponent s must keep 1 + s off the nonpositive "
                          f"integers, got s={s!r}")


def theorem1_angular_integral(sigma: float, lam: float, s: float,
                              policy: TruncationPolicy = DEFAULT_POLICY
                              ) -> SeriesResult:
    """Closed form of int_{-pi}^{pi} (cos^2/sigma^2 + sin^2/lam^2)^s for sigma >= lam.

    Equals 2 pi lam / sigma^(1+2s) 2F1(1/2, 1+s; 1; 1 - lam^2/sigma^2).
    """
    if not sigma >= lam > 0:
        raise DomainError(f"requires sigma >= lambda > 0, got sigma={sigma!r}, "
                          f"lambda={lam!r}")
    _check_s(s)
    res = gauss_2f1(0.5, 1 + s, 1, 1 - (lam / sigma) ** 2, policy)
    return _scaled(res, 2 * math.pi * lam / sigma ** (1 + 2 * s))


def theorem2_angular_integral(sigma: float, lam: float, s: float,
                              policy: TruncationPolicy = DEFAULT_POLICY
                              ) -> SeriesResult:
    """Same integral for lam >= sigma, expanded in 1 - sigma^2/lam^2."""
    if not lam >= sigma > 0:
        raise DomainError(f"requires lambda >= sigma > 0, got sigma={sigma!r}, "
                          f"lambda={lam!r}")
    _check_s(s)
    res = gauss_2f1(0.5, 1 + s, 1, 1 - (sigma / lam) ** 2, policy)
    return _scaled(res, 2 * math.pi * sigma / lam ** (1 + 2 * s))


def theorem3_radial_integral(beta: float, gamma: float, s: float,
                             policy: TruncationPolicy = DEFAULT_POLICY
                             ) -> SeriesResult:
    """int_beta^gamma r^(2s+1) (1 - r^2)^(-s) dr as a difference of 2F1 terms."""
    if is_nonpositive_integer(1 + s):
        raise PoleError(f"radial closed form has a pole at s={s!r}")
    if not 0 < beta <= gamma < 1:
        raise DomainError(f"requires 0 < beta < gamma < 1, got beta={beta!r}, "
                          f"gamma={gamma!r}")

    def phi(t):
        res = gauss_2f1(s, 1 + s, 2 + s, t * t, policy)
        return _scaled(res, t ** (2 + 2 * s) / (2 * (1 + s)))

    upper, lower = phi(gamma), phi(beta)
    return SeriesResult(
        value=star_difference(lambda r: r.value, upper, lower),
        terms_used=upper.terms_used + lower.terms_used,
        error_estimate=upper.error_estimate + lower.error_estimate,
        converged=upper.converged and lower.converged,
        abs_sum=upper.abs_sum + lower.abs_sum,
    )


def surface_area_term_coefficients(frustum: HemiellipsoidFrustum
                                   ) -> tuple[float, float, float, float]:
    """Prefactors (b^2 g^2 pi, b^2 be^2 pi, b^2 c^2 g^6 pi/6a^2, b^2 c^2 be^6 pi/6a^2)."""
    a, b, c = frustum.a, frustum.b, frustum.c
    pf = plane_fractions(frustum)
    k3 = b * b * c * c * math.pi / (6 * a * a)
    return (b * b * pf.gamma ** 2 * math.pi, b * b * pf.beta ** 2 * math.pi,
            k3 * pf.gamma ** 6, k3 * pf.beta ** 6)


def check_f2_precondition(frustum: HemiellipsoidFrustum) -> None:
    a, b, c = frustum.a, frustum.b, frustum.c
    pf = plane_fractions(frustum)
    x = abs(1 - b * b / (a * a))
    for name, t in (("gamma", pf.gamma), ("beta", pf.beta)):
        y = c * c * t * t / (a * a)
        if not x + y < 1:
            raise DivergenceError(
                f"F2 convergence requires |1 - b^2/a^2| + c^2 {name}^2 / a^2 < 1, "
                f"got {x!r} + {y!r} = {x + y!r}")


def surface_area_closed(frustum: HemiellipsoidFrustum,
                        policy: TruncationPolicy = DEFAULT_POLICY,
                        third_arg_sign: int = THIRD_ARG_SIGN) -> AreaReport:
    """Curved area from the F2 + F3 closed form.

    ``third_arg_sign`` selects the sign of the last triple-series argument;
    anything but the default is only useful for comparing the two readings.
    Raises :class:`ConvergenceError` naming the term whose series failed,
    with the partially filled report attached.
    """
    if third_arg_sign not in (-1, 1):
        raise DomainError(f"third_arg_sign must be -1 or 1, got {third_arg_sign!r}")
    check_f2_precondition(frustum)
    a, b, c = frustum.a, frustum.b, frustum.c
    pf = plane_fractions(frustum)
    x = 1 - b * b / (a * a)
    k_f2_g, k_f2_b, k_f3_g, k_f3_b = surface_area_term_coefficients(frustum)

    diagnostics = {}
    terms = {}
    for label, t, k2, k3 in (("gamma", pf.gamma, k_f2_g, k_f3_g),
                             ("beta", pf.beta, k_f2_b, k_f3_b)):
        w = c * c * t * t / (a * a)
        f2 = appell_f2(AppellF2Args(1, 0.5, -0.5, 1, 2, x, -w), policy)
        f3 = srivastava_f3(AREA_F3_PARAMS, x, t * t, third_arg_sign * w, policy)
        diagnostics[f"f2_{label}"] = f2
        diagnostics[f"f3_{label}"] = f3
        terms[f"f2_{label}"] = k2 * f2.value
        terms[f"f3_{label}"] = k3 * f3.value

    report = AreaReport(
        area=(terms["f2_gamma"] - terms["f2_beta"]
              + terms["f3_gamma"] - terms["f3_beta"]),
        f2_term_gamma=terms["f2_gamma"], f2_term_beta=terms["f2_beta"],
        f3_term_gamma=terms["f3_gamma"], f3_term_beta=terms["f3_beta"],
        beta=pf.beta, gamma=pf.gamma, third_arg_sign=third_arg_sign,
        diagnostics=diagnostics,
    )
    failed = [name for name, res in diagnostics.items() if not res.converged]
    if failed:
        detail = ", ".join(
            f"{name} (shells={diagnostics[name].terms_used}, "
            f"last={diagnostics[name].error_estimate:.3g})" for name in failed)
        raise ConvergenceError(f"series did not converge: {detail}",
                               partial=report)
    return report
