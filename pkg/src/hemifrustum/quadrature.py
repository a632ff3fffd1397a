"""Adaptive quadrature used as the independent check on every closed form.

The rule is the 7-point Gauss / 15-point Kronrod pair; |K15 - G7| is taken
as the local error, which is pessimistic for smooth integrands. Intervals are
bisected worst-first until the summed error meets the tolerance. The final
value is summed over intervals in left-endpoint order, so it does not depend
on the refinement history.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ConvergenceError, DomainError

_XK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

# 15 abscissae on [-1, 1] and matching weights; Gauss nodes are odd indices
_NODES = np.concatenate([-_XK[:-1], _XK[::-1]])
_KRONROD = np.concatenate([_WK[:-1], _WK[::-1]])
_GAUSS = np.zeros(15)
_GAUSS[1:7:2] = _WG[:3]
_GAUSS[7] = _WG[3]
_GAUSS[9:15:2] = _WG[2::-1]

DEFAULT_MAX_EVALS = 1_000_000


@dataclass(frozen=True)
class QuadResult:
    value: float
    error_estimate: float
    subdivisions: int
    evaluations: int = 0

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "error_estimate": self.error_estimate,
            "subdivisions": self.subdivisions,
            "evaluations": self.evaluations,
        }


def _evaluate(f, x):
    try:
        y = np.asarray(f(x), dtype=float)
    except (TypeError, ValueError):
        y = None
    if y is None or y.shape != x.shape:
        y = np.array([float(f(float(t))) for t in x.ravel()]).reshape(x.shape)
    return y


def _rule(f, lo, hi):
    mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
    fx = _evaluate(f, mid + half * _NODES)
    k = half * float(fx @ _KRONROD)
    g = half * float(fx @ _GAUSS)
    return k, abs(k - g)


def adaptive_quad_1d(f: Callable, lo: float, hi: float, abs_tol: float = 1e-12,
                     rel_tol: float = 1e-12,
                     max_evals: int = DEFAULT_MAX_EVALS) -> QuadResult:
    """Integrate ``f`` over [lo, hi].

    ``f`` may be vectorized (called with a numpy array of nodes) or scalar.
    Raises :class:`ConvergenceError` carrying the best estimate when the
    evaluation budget runs out or intervals shrink to rounding width.
    """
    if not lo < hi:
        raise DomainError(f"need lo < hi, got [{lo}, {hi}]")
    value, err = _rule(f, lo, hi)
    if not math.isfinite(value + err):
        raise ConvergenceError(f"integrand not finite on [{lo}, {hi}]",
                               partial=QuadResult(value, math.inf, 0, 15))
    # heap of (-error, lo, hi, value)
    heap = [(-err, lo, hi, value)]
    total_err, evals, splits = err, 15, 0
    while total_err > max(abs_tol, rel_tol * abs(value)):
        if evals + 30 > max_evals:
            raise ConvergenceError(
                f"quadrature budget of {max_evals} evaluations exhausted",
                partial=_finish(heap, splits, evals))
        neg_err, a, b, v = heapq.heappop(heap)
        m = 0.5 * (a + b)
        if not a < m < b:
            heapq.heappush(heap, (neg_err, a, b, v))
            raise ConvergenceError(
                f"interval [{a}, {b}] cannot be bisected further",
                partial=_finish(heap, splits, evals))
        v1, e1 = _rule(f, a, m)
        v2, e2 = _rule(f, m, b)
        evals += 30
        if not math.isfinite(v1 + v2 + e1 + e2):
            heapq.heappush(heap, (neg_err, a, b, v))
            raise ConvergenceError(f"integrand not finite on [{a}, {b}]",
                                   partial=_finish(heap, splits, evals))
        splits += 1
        heapq.heappush(heap, (-e1, a, m, v1))
        heapq.heappush(heap, (-e2, m, b, v2))
        value += v1 + v2 - v
        total_err += e1 + e2 + neg_err
    return _finish(heap, splits, evals)


def _finish(heap, splits, evals):
    pieces = sorted(heap, key=lambda item: item[1])
    value = math.fsum(item[3] for item in pieces)
    err = math.fsum(-item[0] for item in pieces)
    return QuadResult(value, err, splits, evals)


def angular_integral_quadrature(sigma: float, lam: float, s: float,
                                tol: float = 1e-12) -> QuadResult:
    """Integral of (cos^2 t / sigma^2 + sin^2 t / lam^2)^s over [-pi, pi]."""
    if not (sigma > 0 and lam > 0):
        raise DomainError(f"need sigma, lambda > 0, got ({sigma}, {lam})")

    def f(t):
        return (np.cos(t) ** 2 / sigma ** 2 + np.sin(t) ** 2 / lam ** 2) ** s

    r = adaptive_quad_1d(f, 0.0, 0.5 * math.pi, abs_tol=0.0, rel_tol=tol)
    return QuadResult(4 * r.value, 4 * r.error_estimate, r.subdivisions,
                      r.evaluations)


def radial_integral_quadrature(beta: float, gamma: float, s: float,
                               tol: float = 1e-12) -> QuadResult:
    """Integral of r^(2s+1) (1 - r^2)^(-s) over [beta, gamma]."""
    if not 0 <= beta < gamma < 1:
        raise DomainError(f"need 0 <= beta < gamma < 1, got ({beta}, {gamma})")

    def f(r):
        return r ** (2 * s + 1) * (1 - r * r) ** (-s)

    return adaptive_quad_1d(f, beta, gamma, abs_tol=0.0, rel_tol=tol)


def surface_area_quadrature_axes(a: float, b: float, c: float, beta: float,
                                 gamma: float, tol: float = 1e-10) -> QuadResult:
    """Curved area of the zone beta < r < gamma of the scaled polar form.

    Computes ab * int_{-pi}^{pi} int_beta^gamma sqrt(1 + c^2 r^2 / (1 - r^2)
    * (cos^2 t / a^2 + sin^2 t / b^2)) r dr dt by iterated quadrature, radial
    inside, over the quarter period. No ordering of a and b is assumed.
    """
    if not (a > 0 and b > 0 and c > 0):
        raise DomainError(f"semi-axes must be positive, got ({a}, {b}, {c})")
    if not 0 <= beta <= gamma < 1:
        raise DomainError(f"need 0 <= beta <= gamma < 1, got ({beta}, {gamma})")
    if beta == gamma:
        return QuadResult(0.0, 0.0, 0, 0)
    inner_tol = tol / 10
    inner_evals = 0

    def radial(theta):
        nonlocal inner_evals
        q = c * c * (math.cos(theta) ** 2 / a ** 2 + math.sin(theta) ** 2 / b ** 2)

        def g(r):
            r2 = r * r
            return np.sqrt(1.0 + q * r2 / (1.0 - r2)) * r

        try:
            res = adaptive_quad_1d(g, beta, gamma, abs_tol=0.0, rel_tol=inner_tol)
        except ConvergenceError as exc:
            raise ConvergenceError(f"radial integral failed at theta={theta}: "
                                   f"{exc}", partial=exc.partial) from exc
        inner_evals += res.evaluations
        return res.value

    def outer(thetas):
        return np.array([radial(float(t)) for t in np.ravel(thetas)])

    try:
        res = adaptive_quad_1d(outer, 0.0, 0.5 * math.pi, abs_tol=0.0, rel_tol=tol)
    except ConvergenceError as exc:
        if str(exc).startswith("radial"):
            raise
        raise ConvergenceError(f"angular integral failed: {exc}",
                               partial=exc.partial) from exc
    scale = 4 * a * b
    return QuadResult(scale * res.value, scale * res.error_estimate,
                      res.subdivisions, res.evaluations + inner_evals)


def surface_area_quadrature(frustum, tol: float = 1e-10) -> QuadResult:
    """Quadrature value of the frustum's curved area."""
    from .geometry import plane_fractions

    pf = plane_fractions(frustum)
    return surface_area_quadrature_axes(frustum.a, frustum.b, frustum.c,
                                        pf.beta, pf.gamma, tol)


def spheroid_zone_area(a: float, c: float, h: float, H: float,
                       tol: float = 1e-12) -> QuadResult:
    """Area of the spheroid zone h < z < H as a surface of revolution.

    The profile radius is rho(z) = a sqrt(1 - z^2/c^2); the area element is
    2 pi sqrt(rho^2 + (rho rho')^2) dz.
    """
    if not 0 <= h <= H <= c:
        raise DomainError(f"need 0 <= h <= H <= c, got ({h}, {H}, {c})")
    if h == H:
        return QuadResult(0.0, 0.0, 0, 0)

    def f(z):
        return 2 * math.pi * np.sqrt(a * a * (1 - z * z / (c * c))
                                     + a ** 4 * z * z / c ** 4)

    return adaptive_quad_1d(f, h, H, abs_tol=0.0, rel_tol=tol)
