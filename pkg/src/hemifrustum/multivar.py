"""Appell's F2 double series and Srivastava's general triple series F(3).

Both are summed shell by shell: all terms of total degree k are produced from
the previous shell by one ratio step each, the shell is reduced in a fixed
order, and the stopping rule of :class:`TruncationPolicy` is applied to shell
sums. Inside the region of absolute convergence this matches any other
summation order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from typing import Sequence

import numpy as np

from .errors import DivergenceError, DomainError, PoleError
from .series import DEFAULT_POLICY, SeriesResult, TruncationPolicy, _Accumulator
from .special import is_nonpositive_integer, pochhammer

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class AppellF2Args:
    """Arguments of F2(a; b, c; d, g; x, y)."""

    a: float
    b: float
    c: float
    d: float
    g: float
    x: float
    y: float

    def terminates(self) -> bool:
        return is_nonpositive_integer(self.a) or (
            is_nonpositive_integer(self.b) and is_nonpositive_integer(self.c))

    def check_admissible(self) -> None:
        if self.terminates():
            return
        if not abs(self.x) + abs(self.y) < 1.0:
            raise DivergenceError(
                "Appell F2 needs |x| + |y| < 1 unless it terminates; "
                f"got |x| + |y| = {abs(self.x) + abs(self.y)!r}")


@dataclass(frozen=True)
class TripleSeriesParams:
    """The fourteen parameter groups of F(3).

    Index weights: ``a``/``e`` use m+n+p, ``b``/``g`` m+n, ``b_prime``/``g_prime``
    n+p, ``b_dprime``/``g_dprime`` m+p, ``c``/``h`` m, ``c_prime``/``h_prime`` n
    and ``c_dprime``/``h_dprime`` p.
    """

    a: tuple[float, ...] = ()
    b: tuple[float, ...] = ()
    b_prime: tuple[float, ...] = ()
    b_dprime: tuple[float, ...] = ()
    c: tuple[float, ...] = ()
    c_prime: tuple[float, ...] = ()
    c_dprime: tuple[float, ...] = ()
    e: tuple[float, ...] = ()
    g: tuple[float, ...] = ()
    g_prime: tuple[float, ...] = ()
    g_dprime: tuple[float, ...] = ()
    h: tuple[float, ...] = ()
    h_prime: tuple[float, ...] = ()
    h_dprime: tuple[float, ...] = ()

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name,
                               tuple(float(v) for v in getattr(self, f.name)))

    @classmethod
    def from_dict(cls, groups: dict) -> "TripleSeriesParams":
        unknown = set(groups) - {f.name for f in fields(cls)}
        if unknown:
            raise DomainError(f"unknown parameter groups: {sorted(unknown)}")
        return cls(**{k: tuple(v) for k, v in groups.items()})

    def to_dict(self) -> dict:
        return {f.name: list(getattr(self, f.name)) for f in fields(self)}

    def counts(self) -> dict:
        return {f.name: len(getattr(self, f.name)) for f in fields(self)}


def _prod(params: Sequence[float], shift) -> np.ndarray | float:
    out = 1.0
    for v in params:
        out = out * (v + shift)
    return out


def _advance(src, top, bottom):
    """Multiply ``src`` by ``top / bottom`` treating any zero factor as final.

    A term that is already zero, or whose numerator factor vanishes, stays
    zero; a zero denominator against a live term is a pole.
    """
    src = np.asarray(src, dtype=float)
    top = np.broadcast_to(np.asarray(top, dtype=float), src.shape)
    bottom = np.broadcast_to(np.asarray(bottom, dtype=float), src.shape)
    live = (src != 0.0) & (top != 0.0)
    if np.any(live & (bottom == 0.0)):
        raise PoleError("a denominator Pochhammer factor vanished before the "
                        "series terminated")
    out = np.zeros_like(src)
    np.divide(src * top, bottom, out=out, where=live)
    return out


def _shell_loop(first_shell, next_shell, policy, max_shells):
    """Drive shell generation with the stopping rule and stall detection."""
    shell = first_shell
    acc = _Accumulator(policy, float(shell.sum()))
    for k in range(1, max_shells):
        shell = next_shell(shell, k)
        shell_sum = float(shell.sum())
        shell_abs = float(np.abs(shell).sum())
        if not math.isfinite(shell_sum) or not math.isfinite(shell_abs):
            return acc.result(converged=False)
        if shell_abs == 0.0:
            acc.count += 1
            return acc.result(converged=True, exact=True)
        done = acc.add(shell_sum, shell_abs)
        if done:
            return acc.result(converged=True)
        # rounding noise of one shell already exceeds the whole sum
        if shell_abs * _EPS > max(abs(acc.total), np.finfo(float).tiny):
            return acc.result(converged=False)
    return acc.result(converged=False)


def appell_f2(args: AppellF2Args,
              policy: TruncationPolicy = DEFAULT_POLICY) -> SeriesResult:
    """Appell F2 = sum (a)_{m+n} (b)_m (c)_n x^m y^n / ((d)_m (g)_n m! n!).

    Shell k holds the terms with m + n = k, indexed by m.
    """
    args.check_admissible()
    a, b, c, d, g, x, y = (args.a, args.b, args.c, args.d, args.g,
                           args.x, args.y)

    def next_shell(prev, k):
        new = np.empty(k + 1)
        m = np.arange(1, k + 1, dtype=float)
        new[1:] = _advance(prev, (a + k - 1) * (b + m - 1) * x,
                           (d + m - 1) * m)
        new[0] = _advance(prev[:1], (a + k - 1) * (c + k - 1) * y,
                          (g + k - 1) * k)[0]
        return new

    return _shell_loop(np.ones(1), next_shell, policy, policy.max_terms)


def lambda_coefficient(params: TripleSeriesParams, m: int, n: int,
                       p: int) -> float:
    """Coefficient Lambda(m, n, p) of F(3), formed from explicit Pochhammers."""
    def group(values, order):
        out = 1.0
        for v in values:
            out *= pochhammer(v, order)
        return out

    den = (group(params.e, m + n + p) * group(params.g, m + n)
           * group(params.g_prime, n + p) * group(params.g_dprime, m + p)
           * group(params.h, m) * group(params.h_prime, n)
           * group(params.h_dprime, p))
    if den == 0.0:
        raise PoleError(f"Lambda({m}, {n}, {p}) has a vanishing denominator")
    num = (group(params.a, m + n + p) * group(params.b, m + n)
           * group(params.b_prime, n + p) * group(params.b_dprime, m + p)
           * group(params.c, m) * group(params.c_prime, n)
           * group(params.c_dprime, p))
    return num / den


def f3_convergence_margins(params: TripleSeriesParams) -> tuple[int, int, int]:
    """Left-hand sides of the three parameter-count inequalities."""
    n = params.counts()
    A, B, B1, B2 = n["a"], n["b"], n["b_prime"], n["b_dprime"]
    C, C1, C2 = n["c"], n["c_prime"], n["c_dprime"]
    E, G, G1, G2 = n["e"], n["g"], n["g_prime"], n["g_dprime"]
    H, H1, H2 = n["h"], n["h_prime"], n["h_dprime"]
    return (1 + E + G + G2 + H - A - B - B2 - C,
            1 + E + G + G1 + H1 - A - B - B1 - C1,
            1 + E + G1 + G2 + H2 - A - B1 - B2 - C2)


def check_f3_convergence(params: TripleSeriesParams) -> bool:
    return all(margin >= 0 for margin in f3_convergence_margins(params))


def srivastava_f3(params: TripleSeriesParams, x: float, y: float, z: float,
                  policy: TruncationPolicy = DEFAULT_POLICY) -> SeriesResult:
    """F(3)[x, y, z] = sum Lambda(m, n, p) x^m y^n z^p / (m! n! p!).

    Shell k is a (k+1) x (k+1) array indexed [m, n] with p = k - m - n; cells
    with m + n > k are zero. ``policy.max_shells`` caps the total degree.
    Equality in the parameter-count conditions leaves the true region of
    convergence smaller than the unit polydisc, so a shell sequence that
    stops decaying is reported as ``converged=False`` rather than trusted.
    """
    if not check_f3_convergence(params):
        raise DivergenceError(
            "F(3) parameter counts violate the convergence inequalities "
            f"(margins {f3_convergence_margins(params)})")
    for name, v in (("x", x), ("y", y), ("z", z)):
        if not abs(v) < 1.0:
            raise DivergenceError(f"F(3) needs |{name}| < 1, got {v!r}")

    P = params

    def next_shell(prev, k):
        new = np.zeros((k + 1, k + 1))
        m = np.arange(1, k + 1, dtype=float)[:, None]
        n = np.arange(0, k, dtype=float)[None, :]
        p = k - m - n
        mask = p >= 0
        mn, mp = m + n, m + p
        top = (_prod(P.a, k - 1) * _prod(P.b, mn - 1)
               * _prod(P.b_dprime, mp - 1) * _prod(P.c, m - 1) * x)
        bottom = (_prod(P.e, k - 1) * _prod(P.g, mn - 1)
                  * _prod(P.g_dprime, mp - 1) * _prod(P.h, m - 1) * m)
        top = np.where(mask, top, 0.0)
        bottom = np.where(mask, bottom, 1.0)
        new[1:, :k] = _advance(prev, top, bottom)
        # m = 0 column: step along n from (0, n-1, p)
        n = np.arange(1, k + 1, dtype=float)
        top = (_prod(P.a, k - 1) * _prod(P.b, n - 1) * _prod(P.b_prime, k - 1)
               * _prod(P.c_prime, n - 1) * y)
        bottom = (_prod(P.e, k - 1) * _prod(P.g, n - 1)
                  * _prod(P.g_prime, k - 1) * _prod(P.h_prime, n - 1) * n)
        new[0, 1:] = _advance(prev[0, :k], top, bottom)
        # corner (0, 0, k): step along p
        new[0, 0] = _advance(
            prev[0:1, 0],
            _prod(P.a, k - 1) * _prod(P.b_prime, k - 1)
            * _prod(P.b_dprime, k - 1) * _prod(P.c_dprime, k - 1) * z,
            _prod(P.e, k - 1) * _prod(P.g_prime, k - 1)
            * _prod(P.g_dprime, k - 1) * _prod(P.h_dprime, k - 1) * k)[0]
        return new

    return _shell_loop(np.ones((1, 1)), next_shell, policy, policy.max_shells)
