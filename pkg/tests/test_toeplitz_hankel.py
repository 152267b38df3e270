import math
import random
from fractions import Fraction

import numpy as np
import pytest

from sposchur.errors import TruncationInsufficient
from sposchur.specializations import Specialization
from sposchur.toeplitz_hankel import (
    FredholmConfig,
    Symbol,
    bo_check,
    gap_probability,
    gessel_check,
    szego_limits,
    szego_normalized_det,
    th_det,
)


def modified_bessel_i(n: int, x: float) -> float:
    """Oracle: I_n(x) by its power series."""
    total = 0.0
    for j in range(0, 80):
        total += (x / 2.0) ** (n + 2 * j) / (math.factorial(j) * math.factorial(n + j))
    return total


def random_symbol(seed: int) -> Symbol:
    rng = random.Random(seed)

    def rho():
        return Specialization.from_powersums(
            {
                k: Fraction(rng.choice([n for n in range(-3, 4) if n]), rng.randint(1, 4))
                for k in (1, 2, 3)
            }
        )

    return Symbol(rho(), rho())


def test_trivial_symbol_coefficients():
    sym = Symbol(Specialization.zero(), Specialization.zero())
    coeffs = sym.fourier_coeffs("f", -5, 5)
    assert coeffs[5] == pytest.approx(1.0, abs=1e-14)
    assert np.max(np.abs(np.delete(coeffs, 5))) < 1e-14


def test_plancherel_symbol_modified_bessel_coefficients():
    theta = 0.4
    sym = Symbol.plancherel(theta)
    # f(z) = exp(theta(2z + 1/z)): f_n = sqrt(2)^n I_n(2 sqrt(2) theta)
    for n in range(-3, 4):
        expected = (math.sqrt(2.0)) ** n * modified_bessel_i(abs(n), 2 * math.sqrt(2) * theta)
        if n < 0:
            expected = math.sqrt(2.0) ** n * modified_bessel_i(-n, 2 * math.sqrt(2) * theta)
        assert sym.fourier_coeff("f", n) == pytest.approx(expected, abs=1e-13), n


def test_plancherel_f_tilde_equals_f():
    # f(-z) = 1/f(z) for the Plancherel symbol, so f~ = f
    sym = Symbol.plancherel(0.35)
    a = sym.fourier_coeffs("f", -4, 4)
    b = sym.fourier_coeffs("f_tilde", -4, 4)
    assert np.max(np.abs(a - b)) < 1e-13


def test_f_tilde_pure_plus_symbol():
    # f = exp(r z) has f~ = exp(r z) as well: f~_k = r^k / k!
    r = 0.7
    sym = Symbol(
        Specialization.from_powersums({1: r}), Specialization.zero()
    )
    for k in range(0, 5):
        assert sym.fourier_coeff("f_tilde", k) == pytest.approx(
            r**k / math.factorial(k), abs=1e-13
        )
    assert sym.fourier_coeff("f_tilde", -1) == pytest.approx(0.0, abs=1e-13)


def test_size_one_determinants():
    sym = Symbol(Specialization.zero(), Specialization.zero())
    assert th_det(sym, "D1", 1) == pytest.approx(2.0, abs=1e-13)  # 2 f_0
    assert th_det(sym, "D2", 1) == pytest.approx(1.0, abs=1e-13)  # f~_0 - f~_{-2}
    assert th_det(sym, "D3", 1) == pytest.approx(1.0, abs=1e-13)
    assert th_det(sym, "D4", 1) == pytest.approx(2.0, abs=1e-13)
    assert th_det(sym, "D1", 0) == 1.0


def test_gessel_identities_plancherel_exact():
    sym = Symbol.plancherel(Fraction(1, 2))
    for which in ("D1", "D2", "D3", "D4"):
        for size in (0, 1, 2, 3):
            assert gessel_check(sym, which, size, degree=6), (which, size)


def test_gessel_identities_randomized_exact():
    sym = random_symbol(11)
    for which in ("D1", "D2", "D3", "D4"):
        for size in (1, 2, 4):
            assert gessel_check(sym, which, size, degree=8), (which, size)


def test_szego_limits_plancherel():
    theta = 0.5
    sym = Symbol.plancherel(theta)
    z_sp, z_o = szego_limits(sym)
    assert z_sp == pytest.approx(math.exp(3 * theta**2 / 2), rel=1e-14)
    assert z_o == pytest.approx(math.exp(3 * theta**2 / 2), rel=1e-14)


def test_szego_limits_trivial_and_p2():
    sym0 = Symbol(Specialization.zero(), Specialization.zero())
    assert szego_limits(sym0) == (1.0, 1.0)
    symp2 = Symbol(
        Specialization.from_powersums({1: 1}),
        Specialization.from_powersums({2: Fraction(1, 2)}),
    )
    z_sp, z_o = szego_limits(symp2)
    assert z_sp / z_o == pytest.approx(math.exp(0.5), rel=1e-13)


def test_szego_convergence_plancherel():
    theta = 0.5
    sym = Symbol.plancherel(theta)
    target = math.exp(3 * theta**2 / 2)
    for which in ("D1", "D2", "D3", "D4"):
        val, tgt = szego_normalized_det(sym, which, 12)
        assert tgt == pytest.approx(target, rel=1e-14)
        assert val == pytest.approx(target, abs=1e-8), which


def test_bo_trivial_symbol():
    sym = Symbol(Specialization.zero(), Specialization.zero())
    for family in ("sp", "o"):
        for m in (0, 1, 3):
            res = bo_check(sym, family, m)
            assert res.lhs == pytest.approx(1.0, abs=1e-12)
            assert abs(res.gap) < 1e-12


def test_bo_plancherel_gap():
    sym = Symbol.plancherel(0.5)
    for family in ("sp", "o"):
        for m in (2, 3, 5):
            res = bo_check(sym, family, m)
            assert abs(res.gap) < 1e-8, (family, m, res)


def test_bo_large_m_approaches_z():
    sym = Symbol.plancherel(0.5)
    z_sp, _ = szego_limits(sym)
    res = bo_check(sym, "sp", 12)
    assert res.lhs == pytest.approx(z_sp, abs=1e-8)
    assert res.rhs == pytest.approx(z_sp, abs=1e-8)


def test_fredholm_window_doubling_robustness():
    sym = Symbol.plancherel(0.5)
    det1, tail1, w1 = gap_probability(sym, "sp", 3, FredholmConfig(window=20))
    det2, tail2, w2 = gap_probability(sym, "sp", 3, FredholmConfig(window=40))
    assert abs(det2 - det1) <= max(tail1, 1e-14)


def test_fredholm_truncation_error():
    sym = Symbol.plancherel(0.5)
    with pytest.raises(TruncationInsufficient):
        gap_probability(sym, "sp", 2, FredholmConfig(window=2, tail_tol=1e-14))


def test_bo_nonplancherel_symbol():
    # BO holds for general admissible symbols; exercise the fourier-mode path
    sym = Symbol(
        Specialization.from_powersums({1: Fraction(2, 5), 2: Fraction(1, 10)}),
        Specialization.from_powersums({1: Fraction(1, 4)}),
    )
    res = bo_check(sym, "sp", 3)
    assert abs(res.gap) < 1e-8, res
    res_o = bo_check(sym, "o", 3)
    assert abs(res_o.gap) < 1e-8, res_o
