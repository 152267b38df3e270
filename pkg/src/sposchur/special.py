"""Bessel J and Airy Ai evaluators with independent quadrature oracles.

Bessel functions of the first kind are generated by Miller's backward
recurrence J_{k-1} = (2k/x) J_k - J_{k+1}, started far enough beyond the
turning point n ~ x that the admixture of the second solution is negligible,
and normalized through J_0(x) + 2 sum_{k>=1} J_{2k}(x) = 1.  One downward
sweep yields the whole array J_0..J_n, which is what the kernel sums consume.

The Airy function uses the Maclaurin series Ai(0) f(x) + Ai'(0) g(x) on a
central interval and the standard asymptotic expansions outside it; the
switch point 6.8 keeps the series' cancellation error and the expansions'
optimal-truncation error both below 1e-10 absolute.  A rotated-ray contour
quadrature of the defining integral serves as the cross-validation oracle
for both evaluators.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

import numpy as np

from .errors import DomainTooLarge, QuadratureNotConverged

# ---------------------------------------------------------------------------
# Gauss-Legendre panel quadrature (shared helper)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=32)
def _leggauss(n: int):
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def gauss_legendre_panels(a: float, b: float, n_panels: int, n_nodes: int):
    """Nodes and weights of composite Gauss-Legendre on [a, b]."""
    base_x, base_w = _leggauss(n_nodes)
    edges = np.linspace(a, b, n_panels + 1)
    half = np.diff(edges) / 2.0
    mid = (edges[:-1] + edges[1:]) / 2.0
    xs = (mid[:, None] + half[:, None] * base_x[None, :]).ravel()
    ws = (half[:, None] * base_w[None, :]).ravel()
    return xs, ws


# ---------------------------------------------------------------------------
# Bessel J, Miller backward recurrence
# ---------------------------------------------------------------------------

_MAX_ORDER = 10**6
_RESCALE = 1e280


def bessel_j_array(n_max: int, x: float) -> np.ndarray:
    """J_0(x), ..., J_{n_max}(x) in one backward sweep."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if n_max > _MAX_ORDER:
        raise ValueError(f"orders beyond {_MAX_ORDER} are not supported")
    x = float(x)
    if x < 0:
        raise ValueError("x must be >= 0; use the parity rule for negative orders")
    out = np.zeros(n_max + 1)
    if x == 0.0:
        out[0] = 1.0
        return out
    start = int(max(n_max, math.ceil(x)) + 16.0 * max(x, 1.0) ** (1.0 / 3.0) + 60)
    jp = 0.0  # J_{k+1}, unnormalized
    jc = 1e-30  # J_k at k = start
    ssum = 0.0
    for k in range(start, -1, -1):
        if k <= n_max:
            out[k] = jc
        if k % 2 == 0:
            ssum += jc if k == 0 else 2.0 * jc
        if k > 0:
            jp, jc = jc, (2.0 * k / x) * jc - jp
            if abs(jc) > _RESCALE:
                jp /= _RESCALE
                jc /= _RESCALE
                ssum /= _RESCALE
                out /= _RESCALE
    out /= ssum
    return out


_array_cache: dict[tuple[float, int], np.ndarray] = {}


def bessel_j(n: int, x: float) -> float:
    """J_n(x) for integer n (any sign) and x >= 0.

    Cached arrays have quantized length, so the returned value is a pure
    function of (n, x) regardless of evaluation history.
    """
    x = float(x)
    sign = 1
    if n < 0:
        n = -n
        sign = -1 if n % 2 else 1
    bucket = 64 * (1 + n // 64)
    arr = _array_cache.get((x, bucket))
    if arr is None:
        arr = bessel_j_array(bucket, x)
        if len(_array_cache) > 64:
            _array_cache.clear()
        _array_cache[(x, bucket)] = arr
    return sign * float(arr[n])


def bessel_j_quadrature(n: int, x: float, nodes: int = 512) -> float:
    """Oracle: J_n(x) as the n-th Laurent coefficient of exp((x/2)(z - 1/z))."""
    k = np.arange(nodes)
    z = np.exp(2j * np.pi * k / nodes)
    vals = np.exp((x / 2.0) * (z - 1.0 / z)) * z ** (-n)
    return float(np.mean(vals).real)


# ---------------------------------------------------------------------------
# Airy Ai
# ---------------------------------------------------------------------------

_AI_ZERO = 3.0 ** (-2.0 / 3.0) / math.gamma(2.0 / 3.0)  # Ai(0)
_AIP_ZERO = -(3.0 ** (-1.0 / 3.0)) / math.gamma(1.0 / 3.0)  # Ai'(0)
_SERIES_EDGE = 6.8
_PUBLIC_DOMAIN = 40.0


@lru_cache(maxsize=4)
def _airy_u_coeffs(count: int) -> tuple[float, ...]:
    """u_k coefficients of the asymptotic expansions, u_0 = 1."""
    us = [1.0]
    for k in range(count - 1):
        us.append(us[-1] * (6 * k + 1) * (6 * k + 5) / (72.0 * (k + 1)))
    return tuple(us)


def _ai_series(x: np.ndarray) -> np.ndarray:
    """Maclaurin series Ai(0) f + Ai'(0) g, adequate for |x| <= ~7."""
    x3 = x * x * x
    f_term = np.ones_like(x)
    g_term = x.copy()
    f_sum = f_term.copy()
    g_sum = g_term.copy()
    for k in range(0, 120):
        f_term = f_term * x3 / ((3 * k + 2) * (3 * k + 3))
        g_term = g_term * x3 / ((3 * k + 3) * (3 * k + 4))
        f_sum += f_term
        g_sum += g_term
        if np.all(np.abs(f_term) < 1e-20) and np.all(np.abs(g_term) < 1e-20):
            break
    return _AI_ZERO * f_sum + _AIP_ZERO * g_sum


def _ai_asym_right(x: np.ndarray) -> np.ndarray:
    """Poincare expansion for large positive x."""
    xi = (2.0 / 3.0) * x**1.5
    us = _airy_u_coeffs(26)
    total = np.zeros_like(x)
    term = np.ones_like(x)
    best = term.copy()
    for k, u in enumerate(us):
        contrib = ((-1) ** k) * u * term
        mask = np.abs(contrib) <= np.abs(best)
        total = np.where(mask, total + contrib, total)
        best = np.where(mask, np.abs(contrib), best)
        term = term / xi
    return np.exp(-xi) / (2.0 * math.sqrt(math.pi) * x**0.25) * total


def _ai_asym_left(x: np.ndarray) -> np.ndarray:
    """Oscillatory expansion for large negative x."""
    t = -x
    xi = (2.0 / 3.0) * t**1.5
    us = _airy_u_coeffs(26)
    p = np.zeros_like(t)
    q = np.zeros_like(t)
    pow_xi = np.ones_like(t)
    for k in range(13):
        sgn = (-1) ** k
        p += sgn * us[2 * k] * pow_xi
        q += sgn * us[2 * k + 1] * pow_xi / xi
        pow_xi = pow_xi / (xi * xi)
    phase = xi - math.pi / 4.0
    return (np.cos(phase) * p + np.sin(phase) * q) / (math.sqrt(math.pi) * t**0.25)


def airy_ai_vec(x: np.ndarray) -> np.ndarray:
    """Vectorized Ai without the public-domain cap (used by inner quadratures)."""
    x = np.asarray(x, dtype=float)
    out = np.empty_like(x)
    mid = np.abs(x) <= _SERIES_EDGE
    right = x > _SERIES_EDGE
    left = x < -_SERIES_EDGE
    if mid.any():
        out[mid] = _ai_series(x[mid])
    if right.any():
        out[right] = _ai_asym_right(x[right])
    if left.any():
        out[left] = _ai_asym_left(x[left])
    return out


def airy_ai(x: float) -> float:
    """Ai(x) for |x| <= 40, to ~1e-10 absolute accuracy."""
    if abs(x) > _PUBLIC_DOMAIN:
        raise DomainTooLarge(f"|x| = {abs(x)} exceeds the validated domain 40")
    return float(airy_ai_vec(np.array([float(x)]))[0])


def airy_ai_quadrature(x: float, tol: float = 1e-12) -> float:
    """Oracle: Ai(x) by quadrature of the contour integral along rotated rays.

    The defining contour runs from exp(-i pi/3) infinity to exp(+i pi/3)
    infinity; by conjugate symmetry Ai(x) = Im(integral over the upper ray)/pi
    with the ray shifted to pass through a convenient real vertex.
    """
    v = 0.5 if x < 1.0 else math.sqrt(x)
    direction = cmath.exp(1j * math.pi / 3.0)
    t_max = 8.0 + 2.0 * math.sqrt(abs(x))

    def integrate(n_panels: int) -> float:
        ts, ws = gauss_legendre_panels(0.0, t_max, n_panels, 12)
        zeta = v + ts * direction
        vals = np.exp(zeta**3 / 3.0 - x * zeta) * direction
        return float(np.sum(ws * vals.imag)) / math.pi

    prev = integrate(24)
    for n_panels in (48, 96, 192):
        cur = integrate(n_panels)
        if abs(cur - prev) < tol:
            return cur
        prev = cur
    raise QuadratureNotConverged(f"Airy contour quadrature at x={x}")
