"""Correlation kernels in three representations: double contour integral,
Bessel sums, and Fourier modes.

All three evaluate the same integer-lattice kernels

    K_sp(a, b) = [z^a w^-b]          F(z)/F(w) (1-w^2) / ((1-wz)(1-w/z))
    K_o(a, b)  = [z^(a+1) w^-(b+1)]  F(z)/F(w) (1-z^2) / ((1-wz)(1-w/z))

whose Plancherel specialization F(z) = exp(theta (z - 1/z)) reduces exactly to
the Bessel forms

    K_sp(a, b) = sum_{i>=1} J_{a+i} J_{b+i} + sum_{i>=0} J_{a-i} J_{b+i}
    K_o(a, b)  = sum_{i>=0} J_{a+i} J_{b+i} - sum_{i>=0} J_{a-i} J_{b+i}

(arguments 2 theta).  Conventions: K_sp governs the particle set
{lambda_i - i + 1} and K_o the set {lambda_i - i}; `lattice_kernel` exposes
both re-indexed to the common configuration {lambda_i - i}, which is the form
consumed by correlation determinants and Fredholm sections.

Contour quadrature is the trapezoidal rule on circles (spectrally accurate
for these analytic integrands), node count doubling from the configured start
until two successive values agree.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from .errors import (
    CoefficientCacheMiss,
    ContourViolation,
    QuadratureNotConverged,
)
from .measures import MeasureSpec
from .special import bessel_j_array

def _check_family(family: str) -> None:
    if family not in ("sp", "o"):
        raise ValueError(f"kernel family must be 'sp' or 'o', got {family!r}")


@dataclass(frozen=True)
class KernelConfig:
    """Contour radii and quadrature policy for kernel evaluation."""

    r_z: float = 1.2
    r_w: float = 0.8
    nodes: int = 64
    representation: str = "contour"  # contour | bessel | fourier
    tol: float = 1e-12
    max_nodes: int = 1 << 14

    def __post_init__(self):
        if self.nodes < 4 or self.nodes & (self.nodes - 1):
            raise ValueError("node count must be a power of two >= 4")


class SymbolF:
    """The function F(z) driving a kernel, with Laurent-mode caches.

    Non-dual families: F = H(rho+; z) / (H(rho-; z) H(rho-; 1/z)); dual
    families: F = E(rho-; z) E(rho-; 1/z) / E(rho+; z).  Alphabet-backed
    specializations evaluate through the rational product form, finitely
    supported power sums through exp of a Laurent polynomial.
    """

    def __init__(
        self,
        evaluate: Callable[[np.ndarray], np.ndarray],
        annulus_z: tuple[float, float],
        annulus_w: tuple[float, float],
        label: str = "symbol",
    ):
        self._evaluate = evaluate
        self.annulus_z = annulus_z  # open interval of admissible |z|
        self.annulus_w = annulus_w
        self.label = label
        self._mode_cache: dict[tuple[bool, float], tuple[int, np.ndarray, float]] = {}

    # -- constructors --------------------------------------------------------

    @classmethod
    def plancherel(cls, theta: float) -> "SymbolF":
        t = float(theta)

        def ev(z):
            return np.exp(t * (z - 1.0 / z))

        return cls(ev, (0.0, math.inf), (0.0, math.inf), label=f"plancherel({t})")

    @classmethod
    def from_measure(cls, spec: MeasureSpec) -> "SymbolF":
        dual = spec.dual
        rp, rm = spec.rho_plus, spec.rho_minus
        xs = [float(v) for v in (rp.variables or [])]
        ys = [float(v) for v in (rm.variables or [])]
        alphabet = rp.kind in ("alphabet", "bc_alphabet") or rm.kind in (
            "alphabet",
            "bc_alphabet",
        )
        if alphabet:
            if rp.kind not in ("bc_alphabet",) or rm.kind not in ("alphabet",):
                raise ValueError(
                    "alphabet symbols need a BC alphabet rho+ and a plain alphabet rho-"
                )
            s = -1.0 if dual else 1.0

            def ev(z):
                z = np.asarray(z, dtype=complex)
                num = np.ones_like(z)
                for y in ys:
                    num = num * (1.0 - s * y * z) * (1.0 - s * y / z)
                den = np.ones_like(z)
                for x in xs:
                    den = den * (1.0 - s * x * z) * (1.0 - s * z / x)
                if rp.include_one:
                    den = den * (1.0 - s * z)
                return num / den

            y_hi = max((abs(y) for y in ys), default=0.0)
            x_vals = [abs(v) for v in xs] + ([1.0] if rp.include_one else [])
            x_lo = min((min(v, 1.0 / v) for v in x_vals), default=math.inf)
            x_hi = max((max(v, 1.0 / v) for v in x_vals), default=0.0)
            if dual:
                # z encircles the poles -x^{±1}; w stays inside the zeros -y^{±1}
                y_lo = min((min(v, 1.0 / v) for v in (abs(y) for y in ys)), default=math.inf)
                return cls(ev, (x_hi, math.inf), (0.0, y_lo), label="dual-alphabet")
            return cls(ev, (y_hi, x_lo), (y_hi, x_lo), label="alphabet")

        # finitely supported power sums: log F is a Laurent polynomial
        kp = rp.max_support or 0
        km = rm.max_support or 0
        plus = [(k, float(rp.p(k))) for k in range(1, kp + 1) if rp.p(k)]
        minus = [(k, float(rm.p(k))) for k in range(1, km + 1) if rm.p(k)]

        if not dual:

            def ev(z):
                z = np.asarray(z, dtype=complex)
                acc = np.zeros_like(z)
                for k, pv in plus:
                    acc = acc + pv * z**k / k
                for k, pv in minus:
                    acc = acc - pv * (z**k + z**-k) / k
                return np.exp(acc)

        else:

            def ev(z):
                z = np.asarray(z, dtype=complex)
                acc = np.zeros_like(z)
                for k, pv in minus:
                    acc = acc + (-1) ** (k + 1) * pv * (z**k + z**-k) / k
                for k, pv in plus:
                    acc = acc - (-1) ** (k + 1) * pv * z**k / k
                return np.exp(acc)

        return cls(ev, (0.0, math.inf), (0.0, math.inf), label="powersum")

    # -- evaluation and contours ------------------------------------------------

    def __call__(self, z):
        return self._evaluate(np.asarray(z, dtype=complex))

    def check_contours(self, r_z: float, r_w: float) -> None:
        if not (0.0 < r_w < r_z):
            raise ContourViolation(f"need 0 < r_w < r_z, got r_w={r_w}, r_z={r_z}")
        if r_z * r_w >= 1.0:
            raise ContourViolation(
                f"need r_z * r_w < 1 for the (1-wz) expansion, got {r_z * r_w}"
            )
        lo, hi = self.annulus_z
        if not (lo < r_z < hi):
            raise ContourViolation(f"r_z={r_z} outside admissible ({lo}, {hi})")
        lo, hi = self.annulus_w
        if not (lo < r_w < hi):
            raise ContourViolation(f"r_w={r_w} outside admissible ({lo}, {hi})")

    def default_config(self) -> KernelConfig:
        z_lo, z_hi = self.annulus_z
        _, w_hi = self.annulus_w
        if z_lo > 1.0:  # dual layout: z encircles the poles, w stays inside the zeros
            r_z = 1.05 * z_lo
            r_w = min(0.8 * w_hi, 0.9 / r_z)
            return KernelConfig(r_z=r_z, r_w=r_w)
        if math.isinf(z_hi):
            return KernelConfig()
        if z_hi <= 1.0:
            r_z = z_lo + 0.65 * (z_hi - z_lo)
            r_w = z_lo + 0.35 * (z_hi - z_lo)
            return KernelConfig(r_z=r_z, r_w=r_w)
        # annulus straddling the unit circle
        r_z = min(math.sqrt(z_hi), 2.0)
        r_w = (z_lo + min(1.0, 0.95 / r_z)) / 2.0
        return KernelConfig(r_z=r_z, r_w=r_w)

    # -- Laurent modes --------------------------------------------------------------

    def modes(
        self,
        inverse: bool,
        radius: float = 1.0,
        min_order: int = 0,
        tol: float = 1e-16,
        recompute: bool = True,
    ) -> tuple[int, np.ndarray, float]:
        """Cached Laurent coefficients of F (or 1/F) on |z| = radius.

        Returns (half_window, coefficients for n in [-W, W], aliasing estimate).
        The FFT size doubles until the boundary modes fall below tol.
        """
        key = (inverse, radius)
        cached = self._mode_cache.get(key)
        if cached is not None and cached[0] >= min_order:
            return cached
        if cached is not None and not recompute:
            raise CoefficientCacheMiss(
                f"mode {min_order} beyond cached window {cached[0]}"
            )
        n = 256
        while True:
            k = np.arange(n)
            z = radius * np.exp(2j * np.pi * k / n)
            vals = self(z)
            if inverse:
                vals = 1.0 / vals
            raw = np.fft.fft(vals) / n
            w = n // 2 - 1
            idx = np.concatenate([np.arange(-w, 0) % n, np.arange(0, w + 1)])
            coeffs = raw[idx]  # order: -W..-1, 0..W
            scale = radius ** np.concatenate([np.arange(-w, 0), np.arange(0, w + 1)])
            coeffs = (coeffs / scale).real
            edge = max(abs(coeffs[0]), abs(coeffs[-1]))
            if (edge < tol and w >= max(min_order, 8)) or n >= (1 << 20):
                out = (w, coeffs, float(edge))
                self._mode_cache[key] = out
                return out
            n *= 2

    def mode(self, order: int, inverse: bool = False, radius: float = 1.0) -> float:
        w, coeffs, _ = self.modes(inverse, radius, min_order=abs(order))
        return float(coeffs[order + w])


# ---------------------------------------------------------------------------
# contour representation
# ---------------------------------------------------------------------------

_coupling_cache: dict[tuple[float, float, int], tuple] = {}


def _contour_data(F: SymbolF, r_z: float, r_w: float, n: int):
    key = (r_z, r_w, n)
    data = _coupling_cache.get(key)
    if data is None:
        k = np.arange(n)
        z = r_z * np.exp(2j * np.pi * k / n)
        w = r_w * np.exp(2j * np.pi * k / n)
        coupling = 1.0 / ((1.0 - np.outer(w, z)) * (1.0 - np.outer(w, 1.0 / z)))
        if len(_coupling_cache) > 8:
            _coupling_cache.clear()
        data = (z, w, coupling)
        _coupling_cache[key] = data
    z, w, coupling = data
    cache = getattr(F, "_fz_cache", None)
    if cache is None:
        cache = F._fz_cache = {}
    pair = cache.get(key)
    if pair is None:
        if len(cache) > 8:
            cache.clear()
        pair = cache[key] = (F(z), F(w))
    return z, w, coupling, pair[0], pair[1]


def _contour_value(
    F: SymbolF, family: str, a: int, b: int, r_z: float, r_w: float, n: int
) -> complex:
    z, w, coupling, fz, fw = _contour_data(F, r_z, r_w, n)
    if family == "sp":
        avec = fz * z ** (-a)
        bvec = (1.0 - w**2) * w**b / fw
    else:
        avec = (1.0 - z**2) * fz * z ** (-a - 1)
        bvec = w ** (b + 1) / fw
    return complex(bvec @ coupling @ avec) / n**2


def kernel_contour_with_error(
    cfg: KernelConfig, F: SymbolF, family: str, a: int, b: int
) -> tuple[float, float]:
    """Kernel value by double trapezoidal contour quadrature, with error estimate."""
    _check_family(family)
    F.check_contours(cfg.r_z, cfg.r_w)
    n = cfg.nodes
    prev = _contour_value(F, family, a, b, cfg.r_z, cfg.r_w, n)
    while n < cfg.max_nodes:
        n *= 2
        cur = _contour_value(F, family, a, b, cfg.r_z, cfg.r_w, n)
        delta = abs(cur - prev)
        if delta <= cfg.tol * max(1.0, abs(cur)):
            if abs(cur.imag) > 1e-12 * max(1.0, abs(cur)):
                raise QuadratureNotConverged(
                    f"imaginary residue {cur.imag} at (a,b)=({a},{b})"
                )
            return float(cur.real), float(delta)
        prev = cur
    raise QuadratureNotConverged(
        f"no convergence to {cfg.tol} within {cfg.max_nodes} nodes"
    )


def kernel_contour(cfg: KernelConfig, F: SymbolF, family: str, a: int, b: int) -> float:
    return kernel_contour_with_error(cfg, F, family, a, b)[0]


def kernel_contour_grid(
    cfg: KernelConfig,
    F: SymbolF,
    family: str,
    a_values: Sequence[int],
    b_values: Sequence[int],
) -> np.ndarray:
    """Kernel on a grid of (a, b), sharing one converged node count.

    Convergence is checked on the extreme corners of the grid, where the
    radial weights z^-a w^b are largest.
    """
    _check_family(family)
    F.check_contours(cfg.r_z, cfg.r_w)
    a_values = list(a_values)
    b_values = list(b_values)
    corners = [(a, b) for a in (min(a_values), max(a_values)) for b in (min(b_values), max(b_values))]
    n = cfg.nodes
    prev = {c: _contour_value(F, family, c[0], c[1], cfg.r_z, cfg.r_w, n) for c in corners}
    while True:
        n *= 2
        if n > cfg.max_nodes:
            raise QuadratureNotConverged("grid quadrature did not converge")
        cur = {c: _contour_value(F, family, c[0], c[1], cfg.r_z, cfg.r_w, n) for c in corners}
        if all(
            abs(cur[c] - prev[c]) <= cfg.tol * max(1.0, abs(cur[c])) for c in corners
        ):
            break
        prev = cur
    z, w, coupling, fz, fw = _contour_data(F, cfg.r_z, cfg.r_w, n)
    if family == "sp":
        amat = fz[None, :] * z[None, :] ** (-np.asarray(a_values)[:, None])
        bmat = ((1.0 - w**2) / fw)[None, :] * w[None, :] ** np.asarray(b_values)[:, None]
    else:
        amat = ((1.0 - z**2) * fz)[None, :] * z[None, :] ** (
            -np.asarray(a_values)[:, None] - 1
        )
        bmat = (1.0 / fw)[None, :] * w[None, :] ** (np.asarray(b_values)[:, None] + 1)
    grid = (bmat @ coupling @ amat.T) / n**2  # [b, a]
    return grid.real.T  # [a, b]


# ---------------------------------------------------------------------------
# Bessel representation (Plancherel symbols)
# ---------------------------------------------------------------------------

_plancherel_j: dict[tuple[float, int], np.ndarray] = {}


def _j_values(x: float, indices: np.ndarray) -> np.ndarray:
    """J_index(x) for an integer index array, via the parity rule.

    The cached array length is quantized so its contents are a pure function
    of the cache key; values then never depend on evaluation history (or on
    thread scheduling), only on (x, index).
    """
    need = int(np.max(np.abs(indices)))
    margin = int(16.0 * max(x, 1.0) ** (1.0 / 3.0) + 60)
    bucket = 256 * (1 + max(need, int(math.ceil(x)) + margin) // 256)
    arr = _plancherel_j.get((x, bucket))
    if arr is None:
        arr = bessel_j_array(bucket, x)
        if len(_plancherel_j) > 16:
            _plancherel_j.clear()
        _plancherel_j[(x, bucket)] = arr
    mag = np.abs(indices)
    vals = arr[mag]
    odd_neg = (indices < 0) & (mag % 2 == 1)
    return np.where(odd_neg, -vals, vals)


def kernel_bessel_with_error(
    theta: float, family: str, a: int, b: int
) -> tuple[float, float]:
    """Kernel of the Plancherel-type measure, by truncated Bessel sums."""
    _check_family(family)
    if theta < 0:
        raise ValueError("theta must be >= 0")
    x = 2.0 * float(theta)
    upper = int(math.ceil(x + 16.0 * max(x, 1.0) ** (1.0 / 3.0) + 60))
    i1 = np.arange(1, max(2, upper - min(a, b) + 1))
    s1 = float(np.sum(_j_values(x, a + i1) * _j_values(x, b + i1)))
    i2 = np.arange(0, max(1, upper - b + 1))
    s2 = float(np.sum(_j_values(x, a - i2) * _j_values(x, b + i2)))
    if family == "sp":
        value = s1 + s2
    else:
        # sum_{i>=0} J_{a+i} J_{b+i} = J_a J_b + s1-with-i>=1
        value = float(_j_values(x, np.array([a]))[0] * _j_values(x, np.array([b]))[0]) + s1 - s2
    return value, 1e-15 * (len(i1) + len(i2)) ** 0.5


def kernel_bessel(theta: float, family: str, a: int, b: int) -> float:
    return kernel_bessel_with_error(theta, family, a, b)[0]


# ---------------------------------------------------------------------------
# Fourier-mode representation
# ---------------------------------------------------------------------------


def kernel_fourier_with_error(
    F: SymbolF,
    family: str,
    a: int,
    b: int,
    radius_z: float = 1.0,
    radius_w: float = 1.0,
    recompute: bool = True,
) -> tuple[float, float]:
    """Kernel from the Laurent modes of F and 1/F.

    sp: c_a d_{-b} + sum_{j>=1} d_{-b-j} (c_{a+j} + c_{a-j})
    o : sum_{j>=0} d_{-b-j} (c_{a+j} - c_{a-j})
    """
    _check_family(family)
    need = max(abs(a), abs(b)) + 16
    wc, cvals, err_c = F.modes(False, radius_z, min_order=need, recompute=recompute)
    wd, dvals, err_d = F.modes(True, radius_w, min_order=need, recompute=recompute)

    def c(n: int) -> float:
        return float(cvals[n + wc]) if abs(n) <= wc else 0.0

    def d(n: int) -> float:
        return float(dvals[n + wd]) if abs(n) <= wd else 0.0

    jmax = min(wc - abs(a), wd - abs(b)) - 1
    if jmax < 8:
        raise CoefficientCacheMiss(
            f"mode window too small for (a,b)=({a},{b}) with recompute disabled"
        )
    if family == "sp":
        total = c(a) * d(-b)
        for j in range(1, jmax + 1):
            total += d(-b - j) * (c(a + j) + c(a - j))
    else:
        total = 0.0
        for j in range(0, jmax + 1):
            total += d(-b - j) * (c(a + j) - c(a - j))
    return total, max(err_c, err_d) * 4.0


def kernel_fourier(F: SymbolF, family: str, a: int, b: int, **kw) -> float:
    return kernel_fourier_with_error(F, family, a, b, **kw)[0]


# ---------------------------------------------------------------------------
# configuration-level kernel and determinants
# ---------------------------------------------------------------------------


def dual_base_symbol(spec: MeasureSpec) -> SymbolF:
    """Symbol of the non-dual measure underlying a dual family.

    Conjugating lambda is the omega involution on the character side:
    m'_sp(.; rho+, rho-) is the image of m_o(.; omega(rho+), rho-) under
    conjugation, and vice versa for m'_o.  The base symbol is therefore the
    plain H-form F with the plus side omega-twisted, i.e. H(omega rho+; z) =
    E(rho+; z).
    """
    if not spec.dual:
        raise ValueError("dual_base_symbol needs a dual-family measure")
    rp, rm = spec.rho_plus, spec.rho_minus
    if rp.kind == "bc_alphabet" and rm.kind == "alphabet":
        xs = [float(v) for v in rp.variables]
        ys = [float(v) for v in rm.variables]
        include_one = rp.include_one

        def ev(z):
            z = np.asarray(z, dtype=complex)
            acc = np.ones_like(z)
            for y in ys:
                acc = acc * (1.0 - y * z) * (1.0 - y / z)
            for x in xs:
                acc = acc * (1.0 + x * z) * (1.0 + z / x)
            if include_one:
                acc = acc * (1.0 + z)
            return acc

        y_hi = max((abs(y) for y in ys), default=0.0)
        hi = 1.0 / y_hi if y_hi else math.inf
        return SymbolF(ev, (y_hi, hi), (y_hi, hi), label="dual-base")
    if rp.max_support is None or rm.max_support is None:
        raise ValueError("dual base symbol needs alphabets or finite power sums")
    plus = [(k, float(rp.p(k))) for k in range(1, rp.max_support + 1) if rp.p(k)]
    minus = [(k, float(rm.p(k))) for k in range(1, rm.max_support + 1) if rm.p(k)]

    def ev(z):
        z = np.asarray(z, dtype=complex)
        acc = np.zeros_like(z)
        for k, pv in plus:
            acc = acc + (-1) ** (k - 1) * pv * z**k / k
        for k, pv in minus:
            acc = acc - pv * (z**k + z**-k) / k
        return np.exp(acc)

    return SymbolF(ev, (0.0, math.inf), (0.0, math.inf), label="dual-base")


def dual_lattice_kernel(
    spec: MeasureSpec,
    representation: str = "contour",
    cfg: KernelConfig | None = None,
) -> Callable[[int, int], float]:
    """Configuration kernel of a dual-family measure on {lambda_i - i}.

    Conjugation acts on configurations as the reflected particle-hole map
    a -> -1-a, so the kernel is delta(a,b) - K_base(-1-a, -1-b) with the base
    family swapped (sp-dual rests on an o measure and conversely).
    """
    if not spec.dual:
        raise ValueError("dual_lattice_kernel needs a dual-family measure")
    base_family = "o" if spec.family == "sp-dual" else "sp"
    G = dual_base_symbol(spec)
    base = lattice_kernel(
        base_family,
        symbol=G,
        representation=representation,
        cfg=cfg or G.default_config(),
    )
    return lambda a, b: (1.0 if a == b else 0.0) - base(-1 - a, -1 - b)


def lattice_kernel(
    family: str,
    theta: float | None = None,
    symbol: SymbolF | None = None,
    representation: str = "bessel",
    cfg: KernelConfig | None = None,
) -> Callable[[int, int], float]:
    """Kernel re-indexed to the configuration {lambda_i - i}.

    K_sp natively governs {lambda_i - i + 1}, so its arguments shift by one;
    K_o already lives on {lambda_i - i}.
    """
    _check_family(family)
    shift = 1 if family == "sp" else 0

    if representation == "bessel":
        if theta is None:
            raise ValueError("bessel representation needs theta")
        return lambda a, b: kernel_bessel(theta, family, a + shift, b + shift)
    if representation == "contour":
        if symbol is None:
            raise ValueError("contour representation needs a symbol")
        use = cfg or symbol.default_config()
        return lambda a, b: kernel_contour(use, symbol, family, a + shift, b + shift)
    if representation == "fourier":
        if symbol is None:
            raise ValueError("fourier representation needs a symbol")
        return lambda a, b: kernel_fourier(symbol, family, a + shift, b + shift)
    raise ValueError(f"unknown representation {representation!r}")


def correlation_det(kernel: Callable[[int, int], float], points: Sequence[int]) -> float:
    """det[K(p_i, p_j)] over a finite set of distinct integer points."""
    pts = [int(p) for p in points]
    if len(set(pts)) != len(pts):
        raise ValueError(f"points must be distinct, got {pts}")
    if not pts:
        return 1.0
    mat = np.array([[kernel(p, q) for q in pts] for p in pts], dtype=float)
    return float(np.linalg.det(mat))


def kernel_matrix(
    kernel: Callable[[int, int], float], sites: Sequence[int]
) -> np.ndarray:
    return np.array([[kernel(a, b) for b in sites] for a in sites], dtype=float)


# ---------------------------------------------------------------------------
# persistable mode caches: JSON header line + little-endian float64 payload
# ---------------------------------------------------------------------------


def reset_numeric_caches() -> None:
    """Clear shared numeric caches (Bessel arrays, quadrature couplings).

    Cached Bessel arrays are recomputed with a start index that depends on
    the largest order requested so far, which can flip last-ulp bits; the CLI
    clears caches per invocation so identical configs give identical bytes.
    """
    from .special import _array_cache

    _plancherel_j.clear()
    _coupling_cache.clear()
    _array_cache.clear()


def save_mode_cache(path: str | Path, F: SymbolF, inverse: bool = False, radius: float = 1.0) -> None:
    w, coeffs, err = F.modes(inverse, radius)
    header = {
        "kind": "laurent-modes",
        "label": F.label,
        "inverse": inverse,
        "radius": radius,
        "half_window": w,
        "aliasing_estimate": err,
        "dtype": "<f8",
    }
    payload = np.asarray(coeffs, dtype="<f8").tobytes()
    with open(path, "wb") as fh:
        fh.write(json.dumps(header).encode() + b"\n")
        fh.write(payload)


def load_mode_cache(path: str | Path) -> tuple[dict, np.ndarray]:
    with open(path, "rb") as fh:
        header = json.loads(fh.readline().decode())
        coeffs = np.frombuffer(fh.read(), dtype="<f8")
    if header.get("kind") != "laurent-modes":
        raise ValueError("not a mode-cache file")
    if len(coeffs) != 2 * header["half_window"] + 1:
        raise ValueError("mode-cache payload length mismatch")
    return header, coeffs
