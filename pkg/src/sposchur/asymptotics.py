"""Bulk and edge limit kernels and convergence experiments.

Bulk: on rays a ~ alpha*theta + offset with |alpha| < 2, the lattice kernels
approach the discrete sine kernel sin(phi(b-a))/(pi(b-a)) with
phi = arg((alpha + i sqrt(4 - alpha^2))/2); phi degenerates to 0 for
alpha > 2 (vanishing density) and pi for alpha < -2 (packed, Kronecker delta).

Edge: at a ~ 2 theta + x theta^(1/3) the rescaled kernels approach the
Airy 2->1 crossover kernels

    A±(x, y) = int_0^inf Ai(x+s) Ai(y+s) ds  ±  int_0^inf Ai(x-s) Ai(y+s) ds

(+ pairs with the sp family, - with o), which also admit a double contour
representation over rays at angles ±pi/3 (right) and ±2pi/3 (left); both are
implemented and cross-checked.  Scan helpers compare lattice kernels with
their limits; because lattice sites are integers, the limit is evaluated at
the exactly-scaled coordinate of the rounded site, x_eff = (a - 2 theta) /
theta^(1/3), so that floor residuals do not pollute the measured rates.

The distribution det(1 - A±) on L^2(s, inf) is evaluated by Nystrom
discretization with composite Gauss-Legendre nodes; P(lambda_1 <= 2 theta +
s theta^(1/3)) under the Plancherel-type measures is the matching discrete
Fredholm determinant, reusing the finite-section machinery.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import QuadratureNotConverged, TruncationInsufficient
from .kernels import kernel_bessel
from .special import airy_ai_vec, gauss_legendre_panels
from .toeplitz_hankel import FredholmConfig, Symbol, gap_probability

# ---------------------------------------------------------------------------
# limit kernels
# ---------------------------------------------------------------------------


def phi_plus(alpha: float) -> float:
    """arg((alpha + sqrt(alpha^2 - 4))/2): pi below -2, 0 above 2, arccos-like between."""
    if alpha >= 2.0:
        return 0.0
    if alpha <= -2.0:
        return math.pi
    return math.atan2(math.sqrt(4.0 - alpha * alpha) / 2.0, alpha / 2.0)


def sine_kernel(phi: float, d: int) -> float:
    """Discrete sine kernel sin(phi d)/(pi d), with density phi/pi on the diagonal."""
    if not 0.0 <= phi <= math.pi:
        raise ValueError("phi must lie in [0, pi]")
    if d == 0:
        return phi / math.pi
    return math.sin(phi * d) / (math.pi * d)


_S_GRID = gauss_legendre_panels(0.0, 40.0, 96, 10)


def airy_2to1(sign: str, x: float, y: float) -> float:
    """A±(x, y) via the two Airy-product integrals.

    The second integrand oscillates in Ai(x-s) but is damped
    superexponentially by Ai(y+s), so composite panels to s = 40 suffice.
    """
    s, w = _S_GRID
    plus = float(np.sum(w * airy_ai_vec(x + s) * airy_ai_vec(y + s)))
    cross = float(np.sum(w * airy_ai_vec(x - s) * airy_ai_vec(y + s)))
    if sign == "+":
        return plus + cross
    if sign == "-":
        return plus - cross
    raise ValueError("sign must be '+' or '-'")


def _ray_nodes(vertex: float, angle: float, length: float, panels: int, order: int):
    """Nodes, weights and direction for one ray from a real vertex."""
    t, w = gauss_legendre_panels(0.0, length, panels, order)
    direction = complex(math.cos(angle), math.sin(angle))
    return vertex + t * direction, w, direction


def airy_2to1_contour(
    sign: str, x: float, y: float, length: float = 9.0, panels: int = 36
) -> float:
    """A±(x, y) by the double contour representation (cross-check route).

    zeta runs over rays at ±pi/3 from +0.4 (steepest descent for exp(z^3/3)),
    omega over rays at ±2pi/3 from -0.8; the vertex offsets keep both
    1/(zeta - omega) and 1/(zeta + omega) away from their pole sets.
    """
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    zu, wu, du = _ray_nodes(0.4, math.pi / 3.0, length, panels, 12)
    zl, wl, dl = _ray_nodes(0.4, -math.pi / 3.0, length, panels, 12)
    zeta = np.concatenate([zu, zl])
    zw = np.concatenate([wu * du, -wl * dl])  # lower ray runs tip -> vertex
    ou, vu, duo = _ray_nodes(-0.8, 2.0 * math.pi / 3.0, length, panels, 12)
    ol, vl, dlo = _ray_nodes(-0.8, -2.0 * math.pi / 3.0, length, panels, 12)
    omega = np.concatenate([ou, ol])
    ow = np.concatenate([vu * duo, -vl * dlo])
    fz = np.exp(zeta**3 / 3.0 - x * zeta) * zw
    fo = np.exp(-(omega**3) / 3.0 + y * omega) * ow
    diff = 1.0 / (zeta[:, None] - omega[None, :])
    ssum = -1.0 / (zeta[:, None] + omega[None, :])
    coupling = diff + ssum if sign == "+" else diff - ssum
    total = fz @ coupling @ fo
    value = total / (2.0j * math.pi) ** 2
    if abs(value.imag) > 1e-9 * max(1.0, abs(value)):
        raise QuadratureNotConverged(f"contour A± not real at ({x}, {y}): {value}")
    return float(value.real)


# ---------------------------------------------------------------------------
# scans: lattice kernels against their limits
# ---------------------------------------------------------------------------


@dataclass
class ScanRow:
    theta: float
    x: float
    y: float
    discrete: float
    limit: float
    abs_error: float


def bulk_scan(
    family: str, thetas, alpha: float, offsets=range(-3, 4)
) -> list[ScanRow]:
    """Lattice kernel at a = alpha theta + offset versus the sine kernel."""
    rows = []
    for theta in thetas:
        base = round(alpha * theta)
        phi = phi_plus(alpha)
        for oa in offsets:
            for ob in offsets:
                val = kernel_bessel(theta, family, base + oa, base + ob)
                lim = sine_kernel(phi, ob - oa)
                rows.append(ScanRow(theta, oa, ob, val, lim, abs(val - lim)))
    return rows


def max_error_by_theta(rows: list[ScanRow]) -> dict[float, float]:
    out: dict[float, float] = {}
    for r in rows:
        out[r.theta] = max(out.get(r.theta, 0.0), r.abs_error)
    return out


def edge_site(theta: float, x: float) -> int:
    return math.floor(2.0 * theta + x * theta ** (1.0 / 3.0))


def edge_scan(
    family: str, thetas, grid=(-2.0, 0.0, 2.0), effective_coords: bool = False
) -> list[ScanRow]:
    """theta^(1/3) K(a, b) at edge-scaled sites against the A± limit.

    By default the limit is evaluated at the requested (x, y) and the floor
    residual of the lattice site is absorbed into the reported error (it is
    O(theta^(-1/3)), the same order as the kernel convergence itself).  With
    effective_coords=True the limit is evaluated at the exactly-scaled
    coordinates of the rounded sites, which isolates the kernel convergence
    (useful at small theta, where floor noise can dominate).
    """
    sign = "+" if family == "sp" else "-"
    rows = []
    for theta in thetas:
        cube = theta ** (1.0 / 3.0)
        for x in grid:
            for y in grid:
                a, b = edge_site(theta, x), edge_site(theta, y)
                val = cube * kernel_bessel(theta, family, a, b)
                if effective_coords:
                    lim = airy_2to1(
                        sign, (a - 2.0 * theta) / cube, (b - 2.0 * theta) / cube
                    )
                else:
                    lim = airy_2to1(sign, x, y)
                rows.append(ScanRow(theta, x, y, val, lim, abs(val - lim)))
    return rows


def nicholson_scan(thetas, xs=(-1.0, 0.0, 1.0), effective_coords: bool = False) -> list[ScanRow]:
    """theta^(1/3) J_{2 theta + x theta^(1/3)}(2 theta) against Ai(x)."""
    from .special import bessel_j

    rows = []
    for theta in thetas:
        cube = theta ** (1.0 / 3.0)
        for x in xs:
            a = edge_site(theta, x)
            val = cube * bessel_j(a, 2.0 * theta)
            at = (a - 2.0 * theta) / cube if effective_coords else x
            lim = float(airy_ai_vec(np.array([at]))[0])
            rows.append(ScanRow(theta, x, 0.0, val, lim, abs(val - lim)))
    return rows


def fit_error_exponent(errors_by_theta: dict[float, float]) -> float:
    """Least-squares slope of log(error) against log(theta)."""
    ts = sorted(errors_by_theta)
    logs = np.log([max(errors_by_theta[t], 1e-300) for t in ts])
    return float(np.polyfit(np.log(ts), logs, 1)[0])


# ---------------------------------------------------------------------------
# Tracy-Widom 2->1 distributions
# ---------------------------------------------------------------------------


def tw_2to1_cdf(
    sign: str,
    s: float,
    interval: float = 16.0,
    panels: int = 24,
    order: int = 6,
    fred: FredholmConfig | None = None,
) -> float:
    """det(1 - A±) on L^2(s, s + interval) by Nystrom quadrature.

    The kernel decays superexponentially to the right, so a fixed window with
    composite Gauss-Legendre nodes reaches well below the 1e-7 stability
    target; `panels`/`interval` doubling is the advertised stability check.
    A FredholmConfig can override the window length and node order.
    """
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    if fred is not None:
        order = fred.order
        if fred.window is not None:
            interval = float(fred.window)
    end = s + interval
    tail = airy_2to1(sign, end, end)
    if abs(tail) > 1e-9:
        raise TruncationInsufficient(
            f"kernel diagonal {tail:.2e} at the window end {end}; enlarge the interval"
        )
    xs, ws = gauss_legendre_panels(s, end, panels, order)
    sg, wg = _S_GRID
    up = airy_ai_vec(xs[:, None] + sg[None, :])  # Ai(x_i + s_k)
    um = airy_ai_vec(xs[:, None] - sg[None, :])  # Ai(x_i - s_k)
    plus = (up * wg[None, :]) @ up.T
    cross = (um * wg[None, :]) @ up.T
    amat = plus + cross if sign == "+" else plus - cross
    root = np.sqrt(ws)
    kmat = root[:, None] * amat * root[None, :]
    return float(np.linalg.det(np.eye(len(xs)) - kmat))


def tw_2to1_stability(sign: str, s: float) -> float:
    """Change under doubling both the interval and the node count."""
    base = tw_2to1_cdf(sign, s)
    fine = tw_2to1_cdf(sign, s, interval=32.0, panels=96, order=6)
    return abs(fine - base)


def edge_cdf_effective_s(family: str, theta: float, s: float) -> float:
    """Scaled coordinate of the gap cutoff actually tested at finite theta.

    The rounded cutoff m = floor(2 theta + s theta^(1/3)) carries a
    family-antisymmetric half-site correction (+1/2 for sp, -1/2 for o),
    mirroring the a' = a + 1/2 versus a'' = a - 1/2 index maps of the two
    kernels; with it the discrete gap probabilities match the continuum
    distributions to O(theta^(-2/3)) instead of O(theta^(-1/3)).
    """
    half = 0.5 if family == "sp" else -0.5
    return (edge_site(theta, s) + half - 2.0 * theta) / theta ** (1.0 / 3.0)


def edge_cdf_discrete(family: str, theta: float, s: float) -> float:
    """P(lambda_1 <= 2 theta + s theta^(1/3)) for the Plancherel-type measure.

    Equals det(1 - K-hat) on configuration sites {m, m+1, ...} with
    m = floor(2 theta + s theta^(1/3)): no occupied site at or beyond m is
    exactly lambda_1 <= m.  The finite-section window extends past the
    spectral edge by ~8 theta^(1/3).
    """
    m = edge_site(theta, s)
    cube = theta ** (1.0 / 3.0)
    width = max(16, int(2.0 * theta + 8.0 * cube) - m + 8)
    sym = Symbol.plancherel(theta)
    det, _, _ = gap_probability(
        sym, family, m, FredholmConfig(window=width, tail_tol=1e-8)
    )
    return det
