"""(Signed) measures on partitions built from character pairs, and the
brute-force correlation oracle.

A measure spec picks a family and a pair of specializations:

    sp      : weight ~ sp_lambda(rho+) s_lambda(rho-)
    o       : weight ~ o_lambda(rho+)  s_lambda(rho-)
    sp-dual : weight ~ sp_lambda(rho+) s_lambda'(rho-)
    o-dual  : weight ~ o_lambda(rho+)  s_lambda'(rho-)

normalized by the closed-form partition function Z of the matching Cauchy
identity.  Weights can be negative (signed measures); they are summed as-is.

Particle configurations live on the integers: lambda maps to the strictly
decreasing set {lambda_i - i : i >= 1}, whose tail below the length L is the
packed Fermi sea -L-1, -L-2, ...  `correlation_bruteforce` sums weights of
all partitions whose configuration contains a given finite point set, doubling
the size cutoff adaptively; it is the independent oracle against which the
determinantal kernels are validated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .characters import character, character_series, schur, schur_series
from .errors import CutoffTooSmall, DivergentNormalization
from .identities import FAMILIES, character_sum_series, normalization_series
from .partitions import Partition, enumerate_partitions, partitions_of_size
from .series import GradedScalar
from .specializations import Specialization

_PARTITION_BUDGET = 10**6

__all__ = [
    "MeasureSpec",
    "BruteForceResult",
    "plancherel_measure",
    "correlation_bruteforce",
    "correlation_bruteforce_batch",
    "hole_probability_bruteforce",
    "total_mass_series",
    "enumerate_partitions",  # re-exported: partition streams belong to this module's interface
    "Partition",
]


@dataclass
class MeasureSpec:
    """Family tag plus the two specializations defining the weights."""

    family: str
    rho_plus: Specialization
    rho_minus: Specialization
    numeric_mode: str = "float"  # "float" or "exact-graded"

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}, got {self.family!r}")
        if self.numeric_mode not in ("float", "exact-graded"):
            raise ValueError(f"unknown numeric mode {self.numeric_mode!r}")

    @property
    def char_family(self) -> str:
        return "sp" if self.family.startswith("sp") else "o"

    @property
    def dual(self) -> bool:
        return self.family.endswith("dual")

    # -- normalization -------------------------------------------------------

    def _log_z_term(self, k: int) -> float:
        sp_side = self.family.startswith("sp")
        sign_even = 1 if (sp_side != self.dual) else -1
        pk_minus = float(self.rho_minus.p(k))
        cross = float(self.rho_plus.p(k)) * pk_minus / k
        if self.dual:
            cross *= (-1) ** (k + 1)
        return (
            cross
            + sign_even * float(self.rho_minus.p(2 * k)) / (2 * k)
            - pk_minus**2 / (2 * k)
        )

    def log_z(self, kmax: int = 400, tol: float = 3e-17) -> float:
        """log of the partition function Z.

        Finite-support power sums give a finite exact sum; alphabet-backed
        specializations are summed until the terms decay below tol, raising
        DivergentNormalization when they fail to.
        """
        fin = self.rho_minus.max_support
        if fin is not None:
            # every term carries a rho_minus factor, so k <= max support
            return sum(self._log_z_term(k) for k in range(1, fin + 1))
        total = 0.0
        prev = math.inf
        for k in range(1, kmax + 1):
            term = self._log_z_term(k)
            total += term
            mag = abs(term)
            if mag < tol and prev < tol:
                return total
            if k > 40 and prev > tol and mag >= prev:
                raise DivergentNormalization(
                    f"partition function series not decaying at k={k}"
                )
            prev = mag
        raise DivergentNormalization("partition function series did not converge")

    def z(self) -> float:
        return math.exp(self.log_z())

    def z_series(self, degree: int) -> GradedScalar:
        return normalization_series(self.family, self.rho_plus, self.rho_minus, degree)

    # -- weights ---------------------------------------------------------------

    def unnormalized_weight(self, lam: Partition):
        """Character product sp/o(rho+) * s(rho-) without the 1/Z factor."""
        c = character(self.char_family, lam, self.rho_plus)
        if not c:
            return c
        return c * schur(lam.conjugate() if self.dual else lam, self.rho_minus)

    def weight(self, lam: Partition) -> float:
        """Normalized (possibly negative) weight of a single partition."""
        return float(self.unnormalized_weight(lam)) / self.z()

    def weight_series(self, lam: Partition, degree: int) -> GradedScalar:
        """Exact graded weight: character series product divided by the Z series."""
        c = character_series(self.char_family, lam, self.rho_plus, degree)
        s = schur_series(
            lam.conjugate() if self.dual else lam, self.rho_minus, degree
        )
        return (c * s).divide_exact(self.z_series(degree))

    # -- serialization ------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "rho_plus": self.rho_plus.to_json(),
            "rho_minus": self.rho_minus.to_json(),
            "numeric_mode": self.numeric_mode,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "MeasureSpec":
        return cls(
            family=doc["family"],
            rho_plus=Specialization.from_json(doc["rho_plus"]),
            rho_minus=Specialization.from_json(doc["rho_minus"]),
            numeric_mode=doc.get("numeric_mode", "float"),
        )


@dataclass
class BruteForceResult:
    """Stabilized brute-force correlation with its tail estimate."""

    value: float
    tail_estimate: float
    cutoff: int


def plancherel_measure(family: str, theta) -> MeasureSpec:
    """The signed Plancherel-type measure: rho+ = pl_{2 theta}, rho- = pl_theta."""
    return MeasureSpec(
        family=family,
        rho_plus=Specialization.plancherel(2 * theta),
        rho_minus=Specialization.plancherel(theta),
    )


_BLOCK = 4  # sizes per adaptive extension block


def _adaptive_sum(
    spec: MeasureSpec,
    keep: Callable[[Partition], bool],
    tol: float,
    start: int,
    max_cutoff: int | None = None,
) -> BruteForceResult:
    """Sum weights of partitions passing `keep`, extending the size cutoff.

    The cutoff grows in blocks of a few sizes; block increments decay
    geometrically for contractive specializations (superexponentially in the
    Plancherel case), so the last increment is an honest tail estimate.
    """
    exact_in = spec.rho_plus.is_exact(8) and spec.rho_minus.is_exact(8)
    zero = Fraction(0) if exact_in else 0.0
    total = zero
    block = zero
    cutoff = max(8, start)
    seen = 0
    n = 0
    first_checkpoint = True
    while True:
        while n <= cutoff:
            for lam in partitions_of_size(n):
                seen += 1
                if keep(lam):
                    w = spec.unnormalized_weight(lam)
                    if w:
                        block += w
            n += 1
        total += block
        increment = abs(float(block))
        block = zero
        if increment < tol / 10 and not first_checkpoint:
            z = spec.z()
            return BruteForceResult(
                value=float(total) / z,
                tail_estimate=increment / z + 1e-15,
                cutoff=cutoff,
            )
        first_checkpoint = False
        if seen > _PARTITION_BUDGET or (max_cutoff and cutoff >= max_cutoff):
            raise CutoffTooSmall(
                f"no stabilization below tol={tol} within cutoff {cutoff}"
            )
        cutoff += _BLOCK


def correlation_bruteforce(
    spec: MeasureSpec,
    points: set[int] | list[int],
    tol: float = 1e-9,
    max_cutoff: int | None = None,
) -> BruteForceResult:
    """Probability that all `points` are occupied, by summing partition weights.

    The cutoff starts at max(8, 2 max|point|) and doubles until the last block
    of sizes contributes less than tol/10.  Raises CutoffTooSmall when the
    partition budget is exhausted before stabilization.
    """
    pts = sorted(set(int(p) for p in points))
    start = max(8, 2 * max((abs(p) for p in pts), default=0))
    return _adaptive_sum(
        spec, lambda lam: all(lam.occupies(p) for p in pts), tol, start, max_cutoff
    )


def hole_probability_bruteforce(
    spec: MeasureSpec, point: int, tol: float = 1e-9
) -> BruteForceResult:
    """Probability that `point` is NOT occupied (independently accumulated)."""
    p = int(point)
    return _adaptive_sum(
        spec, lambda lam: not lam.occupies(p), tol, start=max(8, 2 * abs(p))
    )


def correlation_bruteforce_batch(
    spec: MeasureSpec,
    point_sets: list[list[int]],
    tol: float = 1e-9,
) -> list[BruteForceResult]:
    """Brute-force correlations for many point sets in one enumeration pass.

    Each partition's weight is evaluated once and credited to every point set
    its configuration contains; the adaptive cutoff policy is shared, driven
    by the slowest-stabilizing set.
    """
    sets = [sorted(set(int(p) for p in pts)) for pts in point_sets]
    exact_in = spec.rho_plus.is_exact(8) and spec.rho_minus.is_exact(8)
    zero = Fraction(0) if exact_in else 0.0
    totals = [zero] * len(sets)
    blocks = [zero] * len(sets)
    start = max(
        [8] + [2 * max((abs(p) for p in pts), default=0) for pts in sets]
    )
    cutoff = start
    seen = 0
    n = 0
    first_checkpoint = True
    while True:
        while n <= cutoff:
            for lam in partitions_of_size(n):
                seen += 1
                w = None
                for i, pts in enumerate(sets):
                    if all(lam.occupies(p) for p in pts):
                        if w is None:
                            w = spec.unnormalized_weight(lam)
                            if not w:
                                break
                        blocks[i] += w
            n += 1
        increments = [abs(float(b)) for b in blocks]
        for i in range(len(sets)):
            totals[i] += blocks[i]
            blocks[i] = zero
        if max(increments, default=0.0) < tol / 10 and not first_checkpoint:
            z = spec.z()
            return [
                BruteForceResult(
                    value=float(totals[i]) / z,
                    tail_estimate=increments[i] / z + 1e-15,
                    cutoff=cutoff,
                )
                for i in range(len(sets))
            ]
        first_checkpoint = False
        if seen > _PARTITION_BUDGET:
            raise CutoffTooSmall(f"batched sums not stabilized below tol={tol}")
        cutoff += _BLOCK


def total_mass_series(spec: MeasureSpec, degree: int) -> GradedScalar:
    """Exact graded total mass: sum of weights over |lambda| <= degree, over Z."""
    lhs = character_sum_series(spec.family, spec.rho_plus, spec.rho_minus, degree)
    return lhs.divide_exact(spec.z_series(degree))
