"""Associated Legendre functions P_n^m and their t-derivatives.

Sign convention: no Condon-Shortley phase, so P_1^1(t) = +sqrt(1 - t^2).
The convention is fixed by requiring the cross-relations between the
spherical coefficient functions in :mod:`monogenica.basis` to hold with
the stated signs, and is recorded in ``CONDON_SHORTLEY_PHASE`` below.

Evaluation is by upward recurrence in the degree n from the closed seeds
P_m^m and P_{m+1}^m; derivatives come from rearranging the order-raising
recurrence

    sqrt(1 - t^2) dP_n^m/dt = P_n^{m+1} - m t P_n^m / sqrt(1 - t^2),

never from finite differences.  (Rearranging the degree-lowering
recurrence instead would divide a cancelling difference by 1 - t^2 and
lose three digits near |t| = 1; the order-raising form has a single
dominant term for every m.)  Upward recurrence in double precision is
reliable to roughly 1e-10 relative error up to degree 64, recorded in
``N_MAX_STABLE``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "CONDON_SHORTLEY_PHASE",
    "N_MAX_STABLE",
    "assoc_legendre",
    "legendre_table",
    "legendre_sin_ratio_table",
    "LegendreTable",
]

CONDON_SHORTLEY_PHASE = False
N_MAX_STABLE = 64


def _check_args(n: int, m: int, t) -> None:
    if not (0 <= m <= n):
        raise ValueError(f"require 0 <= m <= n, got n={n}, m={m}")
    if n > N_MAX_STABLE:
        raise ValueError(f"degree {n} exceeds the stable range n <= {N_MAX_STABLE}")
    if np.any(np.abs(t) > 1.0):
        raise ValueError("require -1 <= t <= 1")


def _double_factorial(k: int) -> float:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return float(out)


def _p_diagonal(m: int, t):
    # P_m^m(t) = (2m-1)!! (1-t^2)^(m/2), positive for |t| < 1
    if m == 0:
        return np.ones_like(np.asarray(t, dtype=float))
    s2 = 1.0 - np.asarray(t, dtype=float) ** 2
    return _double_factorial(2 * m - 1) * s2 ** (0.5 * m)


def _upward(n_target: int, m: int, t, p_mm):
    """Run the degree recurrence from P_m^m up to P_{n_target}^m."""
    t = np.asarray(t, dtype=float)
    p_prev = p_mm
    if n_target == m:
        return p_prev
    p_cur = (2 * m + 1) * t * p_prev
    for n in range(m + 1, n_target):
        p_next = ((2 * n + 1) * t * p_cur - (n + m) * p_prev) / (n - m + 1)
        p_prev, p_cur = p_cur, p_next
    return p_cur


def assoc_legendre(n: int, m: int, t):
    """Return (P_n^m(t), dP_n^m/dt).

    ``t`` may be a scalar or an array.  The derivative diverges at
    t = +-1 for odd m (the function behaves like sin(theta) there); the
    returned value is then inf/nan per IEEE semantics.
    """
    _check_args(n, m, t)
    t = np.asarray(t, dtype=float)
    value = _upward(n, m, t, _p_diagonal(m, t))
    raised = _upward(n, m + 1, t, _p_diagonal(m + 1, t)) if m + 1 <= n else np.zeros_like(t)
    sq = np.sqrt(1.0 - t * t)
    with np.errstate(divide="ignore", invalid="ignore"):
        if m == 0:
            derivative = raised / sq if n >= 1 else np.zeros_like(t)
        else:
            # ratio P_n^m / sqrt(1-t^2), finite at the poles
            ratio = _upward(n, m, t, _double_factorial(2 * m - 1) * (1.0 - t * t) ** (0.5 * (m - 1)))
            derivative = (raised - m * t * ratio) / sq
    if value.ndim == 0:
        return float(value), float(derivative)
    return value, derivative


@dataclass(frozen=True)
class LegendreTable:
    """All P_n^m(t) and dP_n^m/dt for 0 <= m <= n <= n_max at fixed t.

    ``values`` and ``derivatives`` are indexed [n, m] (entries with
    m > n are zero-filled and not meaningful).
    """

    n_max: int
    t: np.ndarray
    values: np.ndarray
    derivatives: np.ndarray

    def value(self, n: int, m: int):
        if not (0 <= m <= n <= self.n_max):
            raise ValueError(f"index (n={n}, m={m}) outside table range")
        return self.values[n, m]

    def derivative(self, n: int, m: int):
        if not (0 <= m <= n <= self.n_max):
            raise ValueError(f"index (n={n}, m={m}) outside table range")
        return self.derivatives[n, m]


def legendre_table(n_max: int, t) -> LegendreTable:
    """Tabulate P_n^m and dP_n^m/dt for all 0 <= m <= n <= n_max."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if n_max > N_MAX_STABLE:
        raise ValueError(f"n_max {n_max} exceeds the stable range n <= {N_MAX_STABLE}")
    t = np.asarray(t, dtype=float)
    if np.any(np.abs(t) > 1.0):
        raise ValueError("require -1 <= t <= 1")

    shape = (n_max + 1, n_max + 1) + t.shape
    p = np.zeros(shape)
    for m in range(n_max + 1):
        p[m, m] = _p_diagonal(m, t)
        if m + 1 <= n_max:
            p[m + 1, m] = (2 * m + 1) * t * p[m, m]
        for n in range(m + 1, n_max):
            p[n + 1, m] = ((2 * n + 1) * t * p[n, m] - (n + m) * p[n - 1, m]) / (n - m + 1)

    dp = np.zeros(shape)
    with np.errstate(divide="ignore", invalid="ignore"):
        denom = 1.0 - t * t
        for m in range(n_max + 1):
            if m > 0:
                dp[m, m] = -m * t * p[m, m] / denom
            for n in range(m + 1, n_max + 1):
                dp[n, m] = ((n + m) * p[n - 1, m] - n * t * p[n, m]) / denom
    return LegendreTable(n_max=n_max, t=t, values=p, derivatives=dp)


def legendre_sin_ratio_table(n_max: int, t) -> np.ndarray:
    """Tabulate S_n^m = P_n^m(t) / sqrt(1 - t^2) for 1 <= m <= n <= n_max.

    S satisfies the same degree recurrence as P with the diagonal seed
    divided by sqrt(1 - t^2); that seed is a polynomial times
    (1-t^2)^((m-1)/2), so every entry is finite at t = +-1.  Entries with
    m = 0 or m > n are zero-filled.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    t = np.asarray(t, dtype=float)
    if np.any(np.abs(t) > 1.0):
        raise ValueError("require -1 <= t <= 1")

    s2 = 1.0 - t * t
    shape = (n_max + 1, n_max + 1) + t.shape
    s = np.zeros(shape)
    for m in range(1, n_max + 1):
        s[m, m] = _double_factorial(2 * m - 1) * s2 ** (0.5 * (m - 1))
        if m + 1 <= n_max:
            s[m + 1, m] = (2 * m + 1) * t * s[m, m]
        for n in range(m + 1, n_max):
            s[n + 1, m] = ((2 * n + 1) * t * s[n, m] - (n + m) * s[n - 1, m]) / (n - m + 1)
    return s
