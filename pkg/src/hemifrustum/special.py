"""Scalar special functions: log-gamma, Pochhammer symbols, pFq series."""

from __future__ import annotations

import math
from typing import Sequence

from .errors import DivergenceError, DomainError, PoleError
from .series import DEFAULT_POLICY, SeriesResult, TruncationPolicy, _Accumulator


def is_nonpositive_integer(x: float) -> bool:
    return x <= 0 and float(x).is_integer()


_EULER_GAMMA = 0.57721566490153286061
_TAYLOR_ORDER = 56


def _zeta_minus_one(k: int) -> float:
    """zeta(k) - 1 for integer k >= 2 by Euler-Maclaurin with a cutoff at 64."""
    n = 64
    head = math.fsum(j ** -k for j in range(2, n))
    tail = (n ** (1 - k) / (k - 1) + 0.5 * n ** -k + k * n ** (-k - 1) / 12
            - k * (k + 1) * (k + 2) * n ** (-k - 3) / 720
            + k * (k + 1) * (k + 2) * (k + 3) * (k + 4) * n ** (-k - 5) / 30240)
    return head + tail


_ZM1 = [0.0, 0.0] + [_zeta_minus_one(k) for k in range(2, _TAYLOR_ORDER + 1)]


def _log_gamma_near_zero(eps: float, around_two: bool) -> float:
    # ln Gamma(1+e) = -g e + sum (-1)^k zeta(k) e^k / k
    # ln Gamma(2+e) = (1-g) e + sum (-1)^k (zeta(k) - 1) e^k / k
    total = 0.0
    power = -eps
    for k in range(2, _TAYLOR_ORDER + 1):
        power *= -eps
        coeff = _ZM1[k] if around_two else 1.0 + _ZM1[k]
        total += coeff * power / k
    linear = (1.0 - _EULER_GAMMA) if around_two else -_EULER_GAMMA
    return linear * eps + total


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0.

    Taylor series about 1 and 2 keep full relative accuracy next to the two
    zeros; elsewhere the C library's lgamma is used.
    """
    if not x > 0:
        raise DomainError(f"log_gamma needs x > 0, got {x}")
    if math.isinf(x):
        return math.inf
    if 0.5 <= x < 1.5:
        return _log_gamma_near_zero(x - 1.0, around_two=False)
    if 1.5 <= x <= 2.5:
        return _log_gamma_near_zero(x - 2.0, around_two=True)
    return math.lgamma(x)


def pochhammer(x: float, n: int) -> float:
    """Rising factorial x (x+1) ... (x+n-1); equal to 1 for n == 0."""
    if n < 0 or int(n) != n:
        raise DomainError(f"pochhammer order must be a nonnegative integer, got {n}")
    out = 1.0
    for k in range(int(n)):
        out *= x + k
        if out == 0.0:
            break
    return out


def pfq(numerators: Sequence[float], denominators: Sequence[float], z: float,
        policy: TruncationPolicy = DEFAULT_POLICY) -> SeriesResult:
    """Generalized hypergeometric series pFq(numerators; denominators; z).

    Terms are advanced by their ratio, so no Pochhammer symbol is formed
    explicitly. A numerator parameter equal to a nonpositive integer ends the
    series exactly; a denominator one reached first raises ``PoleError``.
    """
    num = [float(a) for a in numerators]
    den = [float(b) for b in denominators]
    p, q = len(num), len(den)
    terminating = any(is_nonpositive_integer(a) for a in num)

    if z == 0.0:
        return SeriesResult(1.0, 1, 0.0, True, 1.0)
    if not terminating:
        if p == q + 1 and abs(z) >= 1.0:
            raise DivergenceError(
                f"{p}F{q} series diverges for |z| >= 1 (z = {z})")
        if p > q + 1:
            raise DivergenceError(
                f"{p}F{q} series has zero radius of convergence (z = {z})")

    term = 1.0
    acc = _Accumulator(policy, term)
    for r in range(policy.max_terms - 1):
        top = 1.0
        for a in num:
            top *= a + r
        bottom = float(r + 1)
        for b in den:
            bottom *= b + r
        if bottom == 0.0:
            raise PoleError(
                f"denominator parameter {-r} of {p}F{q} reached at term {r + 1}")
        if top == 0.0:
            return acc.result(converged=True, exact=True)
        term *= top * z / bottom
        if not math.isfinite(term):
            return acc.result(converged=False)
        if acc.add(term):
            return acc.result(converged=True)
    return acc.result(converged=False)


def gauss_2f1(a: float, b: float, c: float, z: float,
              policy: TruncationPolicy = DEFAULT_POLICY) -> SeriesResult:
    """Gauss series 2F1(a, b; c; z) for |z| < 1."""
    return pfq([a, b], [c], z, policy)


def four_f3_negative_denominator_reduction(
        A: float, B: float, C: float, D: float, E: float, G: float, p: int,
        z: float, policy: TruncationPolicy = DEFAULT_POLICY) -> SeriesResult:
    """Value of 4F3(A, B, C, D; E, G, -p; z) / Gamma(-p) for p = 0, 1, 2, ...

    The left side is read as its limit, which keeps only the terms r >= p + 1.
    Shifting the index by p + 1 gives

        (A)_{p+1} (B)_{p+1} (C)_{p+1} (D)_{p+1} z^{p+1} / ((E)_{p+1} (G)_{p+1} (p+1)!)
        * 4F3(A+p+1, B+p+1, C+p+1, D+p+1; E+p+1, G+p+1, p+2; z).
    """
    if p < 0 or int(p) != p:
        raise DomainError(f"p must be a nonnegative integer, got {p}")
    p = int(p)
    for name, val in (("E", E), ("G", G)):
        if is_nonpositive_integer(val):
            raise PoleError(f"denominator parameter {name} = {val} is a pole")
    k = p + 1
    prefactor = (pochhammer(A, k) * pochhammer(B, k) * pochhammer(C, k)
                 * pochhammer(D, k) / (pochhammer(E, k) * pochhammer(G, k)
                                       * math.factorial(k)))
    if prefactor == 0.0 or z == 0.0:
        return SeriesResult(0.0, 0, 0.0, True, 0.0)
    tail = pfq([A + k, B + k, C + k, D + k], [E + k, G + k, 1.0 + k], z, policy)
    scale = prefactor * z ** k
    return SeriesResult(
        value=scale * tail.value,
        terms_used=tail.terms_used,
        error_estimate=abs(scale) * tail.error_estimate,
        converged=tail.converged,
        abs_sum=abs(scale) * tail.abs_sum,
    )


def sin_cos_moment(alpha: float, beta: float) -> float:
    """Integral of sin^alpha(t) cos^beta(t) over [0, pi/2]."""
    if not (alpha > -1 and beta > -1):
        raise DomainError(
            f"sin_cos_moment needs alpha, beta > -1, got ({alpha}, {beta})")
    return 0.5 * math.exp(log_gamma((alpha + 1) / 2) + log_gamma((beta + 1) / 2)
                          - log_gamma((alpha + beta + 2) / 2))
