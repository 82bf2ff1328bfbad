import numpy as np
import pytest

from monogenica.legendre import (
    CONDON_SHORTLEY_PHASE,
    assoc_legendre,
    legendre_sin_ratio_table,
    legendre_table,
)


def relative_residual(parts):
    scale = np.maximum.reduce([np.abs(q) for q in parts])
    return np.abs(sum(parts)) / np.maximum(scale, 1e-300)


def test_p10_is_t():
    value, derivative = assoc_legendre(1, 0, 0.5)
    assert value == pytest.approx(0.5, abs=1e-15)
    assert derivative == pytest.approx(1.0, abs=1e-15)


def test_sign_convention():
    # no Condon-Shortley phase: P_1^1(0) = +1
    assert not CONDON_SHORTLEY_PHASE
    value, _ = assoc_legendre(1, 1, 0.0)
    assert value == pytest.approx(1.0, abs=1e-15)


def test_two_step_spot_check():
    n, m, t = 3, 2, 0.3
    p_up, _ = assoc_legendre(n + 1, m, t)
    p_mid, _ = assoc_legendre(n, m, t)
    p_low, _ = assoc_legendre(n - 1, m, t)
    residual = (n - m + 1) * p_up - (2 * n + 1) * t * p_mid + (n + m) * p_low
    assert abs(residual) < 1e-13


def test_argument_validation():
    with pytest.raises(ValueError):
        assoc_legendre(2, 3, 0.5)
    with pytest.raises(ValueError):
        assoc_legendre(2, -1, 0.5)
    with pytest.raises(ValueError):
        assoc_legendre(2, 1, 1.5)
    with pytest.raises(ValueError):
        legendre_table(-1, 0.5)


def test_table_matches_single_calls():
    t = 0.7
    table = legendre_table(5, t)
    for n in range(6):
        for m in range(n + 1):
            value, derivative = assoc_legendre(n, m, t)
            assert table.value(n, m) == pytest.approx(value, rel=1e-14, abs=1e-300)
            assert table.derivative(n, m) == pytest.approx(derivative, rel=1e-14)


def test_table_trivial():
    table = legendre_table(0, 0.3)
    assert table.value(0, 0) == 1.0
    assert table.derivative(0, 0) == 0.0
    with pytest.raises(ValueError):
        table.value(1, 0)


def test_values_at_poles():
    for t in (1.0, -1.0):
        table = legendre_table(8, t)
        for n in range(9):
            for m in range(1, n + 1):
                assert table.value(n, m) == 0.0
        assert table.value(5, 0) == pytest.approx(t**5, abs=1e-14)
    assert assoc_legendre(6, 0, 1.0)[0] == pytest.approx(1.0, abs=1e-14)


@pytest.mark.parametrize("seed", [0, 1])
def test_all_recurrences_random_arguments(seed):
    rng = np.random.default_rng(seed)
    t = rng.uniform(-0.999, 0.999, 100)
    n_top = 40
    table = legendre_table(n_top + 2, t)
    p, dp = table.values, table.derivatives
    s2 = 1.0 - t * t
    sq = np.sqrt(s2)
    worst = 0.0
    for n in range(n_top + 1):
        for m in range(n + 1):
            low = p[n, m + 1] if m + 1 <= n else np.zeros_like(t)
            below = p[n - 1, m] if n - 1 >= m else np.zeros_like(t)
            r1 = relative_residual(
                [s2 * dp[n + 1, m], -(n + m + 1) * p[n, m], (n + 1) * t * p[n + 1, m]]
            )
            r2 = relative_residual(
                [sq * dp[n + 1, m], -p[n + 1, m + 1], m * t * p[n + 1, m] / sq]
            )
            r3 = relative_residual(
                [sq * p[n + 1, m], -p[n + 2, m + 1] / (2 * n + 3), low / (2 * n + 3)]
            )
            r4 = relative_residual(
                [(n - m + 1) * p[n + 1, m], -(2 * n + 1) * t * p[n, m], (n + m) * below]
            )
            worst = max(worst, float(np.max(np.maximum(np.maximum(r1, r2), np.maximum(r3, r4)))))
    assert worst < 1e-12


def test_sin_ratio_table():
    rng = np.random.default_rng(7)
    t = rng.uniform(-0.99, 0.99, 40)
    sq = np.sqrt(1.0 - t * t)
    table = legendre_table(10, t)
    ratio = legendre_sin_ratio_table(10, t)
    for n in range(1, 11):
        for m in range(1, n + 1):
            assert float(np.max(np.abs(ratio[n, m] * sq - table.values[n, m]))) < 1e-11


def test_sin_ratio_finite_at_poles():
    ratio = legendre_sin_ratio_table(8, np.array([1.0, -1.0]))
    assert np.all(np.isfinite(ratio))
    # S_1^1 = 1 everywhere, S_2^1 = 3t at the poles
    assert ratio[1, 1] == pytest.approx(1.0)
    assert ratio[2, 1, 0] == pytest.approx(3.0)
    assert ratio[2, 1, 1] == pytest.approx(-3.0)
