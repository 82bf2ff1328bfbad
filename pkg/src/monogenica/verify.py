"""Machine-readable verification suite over the library's identities.

Each check measures a worst-case residual against a pinned tolerance; the
collection is deterministic for a fixed (n_max, seed, deep) triple.  The
CLI ``verify`` command serializes the result and exits nonzero when any
check fails.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from . import basis, calculus, quadrature, series
from .basis import BasisFamily, BasisIndex
from .legendre import legendre_table
from .parallel import ordered_map
from .quaternion import Point3, Quaternion

__all__ = ["CheckResult", "gram_matrix", "gram_indices", "run_suite", "report_dict"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    tolerance: float
    passed: bool


def _result(name: str, residual: float, tolerance: float) -> CheckResult:
    residual = float(residual)
    return CheckResult(name, residual, tolerance, bool(residual < tolerance))


def random_ball_points(rng, count: int, r_max: float = 0.95) -> Point3:
    r = r_max * rng.uniform(0.05, 1.0, count) ** (1.0 / 3.0)
    t = rng.uniform(-0.99, 0.99, count)
    phi = rng.uniform(0.0, 2.0 * math.pi, count)
    st = np.sqrt(1.0 - t * t)
    return Point3(r * t, r * st * np.cos(phi), r * st * np.sin(phi))


def random_shell_points(rng, count: int, r_in: float = 1.1, r_out: float = 2.5) -> Point3:
    r = rng.uniform(r_in, r_out, count)
    t = rng.uniform(-0.99, 0.99, count)
    phi = rng.uniform(0.0, 2.0 * math.pi, count)
    st = np.sqrt(1.0 - t * t)
    return Point3(r * t, r * st * np.cos(phi), r * st * np.sin(phi))


def gram_indices(domain: str, n_max: int) -> list[BasisIndex]:
    """Index set whose Gram matrix the CLI reports for the given domain."""
    if domain == "ball":
        return series.inner_indices(n_max)
    if domain == "exterior":
        return [BasisIndex(-(n + 2), l) for n in range(n_max + 1) for l in range(n + 1)]
    if domain == "sphere":
        return series.laurent_indices(-(n_max + 2), n_max)
    raise ValueError(f"unknown gram domain {domain!r}")


def gram_matrix(
    indices: list[BasisIndex],
    rule: quadrature.QuadratureRule,
    family: BasisFamily = BasisFamily.PHI,
) -> np.ndarray:
    """Pairwise H-valued inner products, returned as an (N, N, 4) array."""
    pts = rule.points
    w = rule.weights
    values = ordered_map(lambda idx: basis.basis_function(idx, family)(pts), list(indices))
    n = len(indices)
    out = np.zeros((n, n, 4))
    for i in range(n):
        fi = values[i].conj()
        for j in range(n):
            prod = fi * values[j]
            out[i, j] = (
                np.sum(w * prod.a0),
                np.sum(w * prod.a1),
                np.sum(w * prod.a2),
                np.sum(w * prod.a3),
            )
    return out


def gram_deviation(gram: np.ndarray, diagonal: np.ndarray) -> float:
    """Worst entrywise deviation from the expected diagonal matrix."""
    magnitude = np.sqrt(np.sum(gram**2, axis=-1))
    off = magnitude - np.diag(np.diag(magnitude))
    diag_err = np.abs(np.diag(magnitude) - diagonal)
    return float(max(off.max(initial=0.0), diag_err.max(initial=0.0)))


def _check_quaternion_algebra(rng) -> CheckResult:
    a = Quaternion(*rng.standard_normal(4))
    b = Quaternion(*rng.standard_normal(4))
    res = max(
        float(((a * b).conj() - b.conj() * a.conj()).norm()),
        float(abs((a * b).norm() - a.norm() * b.norm())),
        float((a * a.inverse() - Quaternion(1.0)).norm()),
        float((a.hat().hat() - a).norm()),
    )
    return _result("quaternion_algebra_identities", res, 1e-13)


def _check_legendre(rng, deep: bool) -> CheckResult:
    t = rng.uniform(-0.999, 0.999, 100)
    n_top = 40 if deep else 12
    table = legendre_table(n_top + 2, t)
    p, dp = table.values, table.derivatives
    s2 = 1.0 - t * t
    sq = np.sqrt(s2)
    def relative(parts):
        # residual of sum(parts) = 0, scaled by the largest term magnitude
        scale = np.maximum.reduce([np.abs(q) for q in parts])
        return np.abs(sum(parts)) / np.maximum(scale, 1e-300)

    worst = 0.0
    for n in range(n_top + 1):
        for m in range(n + 1):
            low = p[n, m + 1] if m + 1 <= n else np.zeros_like(t)
            below = p[n - 1, m] if n - 1 >= m else np.zeros_like(t)
            r1 = relative(
                [s2 * dp[n + 1, m], -(n + m + 1) * p[n, m], (n + 1) * t * p[n + 1, m]]
            )
            r2 = relative(
                [sq * dp[n + 1, m], -p[n + 1, m + 1], m * t * p[n + 1, m] / sq]
            )
            r3 = relative(
                [sq * p[n + 1, m], -p[n + 2, m + 1] / (2 * n + 3), low / (2 * n + 3)]
            )
            r4 = relative(
                [
                    (n - m + 1) * p[n + 1, m],
                    -(2 * n + 1) * t * p[n, m],
                    (n + m) * below,
                ]
            )
            worst = max(worst, float(np.max(r1 + r2 + r3 + r4)))
    return _result("legendre_recurrences", worst, 1e-11)


def _check_coeff_relations(rng, n_top: int) -> CheckResult:
    theta = rng.uniform(0.05, math.pi - 0.05, 50)
    worst = 0.0
    for n in range(n_top + 1):
        for m in range(n + 1):
            a1, b1, c1 = basis.coeff_functions(n, m, theta)
            a2, b2, c2 = basis.coeff_functions(n, m + 1, theta)
            scale1 = np.maximum(np.abs(c2) + np.abs(b2), 1.0)
            scale2 = np.maximum((n + m + 2) * (np.abs(b1) + np.abs(c1)), 1.0)
            worst = max(
                worst,
                float(np.max(np.abs((n + m + 2) * a1 - (c2 - b2)) / scale1)),
                float(np.max(np.abs(a2 - (n + m + 2) * (b1 + c1)) / scale2)),
            )
    return _result("coefficient_function_relations", worst, 1e-11)


def _check_triple_path(rng, deg: int) -> CheckResult:
    pts = random_ball_points(rng, 100)
    worst = 0.0
    for n in range(deg + 1):
        for l in range(n + 1):
            closed = basis.appell_inner_closed(n, l, pts)
            rec = basis.appell_inner_recur(n, l, pts)
            leg = basis.phi_inner_spherical(n, l, pts) * basis.family_convert(n, l)
            scale = max(float(np.max(closed.norm())), 1e-9)
            worst = max(
                worst,
                float(np.max((closed - rec).norm())) / scale,
                float(np.max((closed - leg).norm())) / scale,
            )
    return _result("triple_path_agreement", worst, 1e-11)


def run_suite(n_max: int = 6, seed: int = 0, deep: bool = False) -> list[CheckResult]:
    """Run every verification check; deterministic for fixed arguments."""
    rng = np.random.default_rng(seed)
    checks: list[CheckResult] = []
    ball_pts = random_ball_points(rng, 40)
    shell_pts = random_shell_points(rng, 40)

    checks.append(_check_quaternion_algebra(rng))
    checks.append(_check_legendre(rng, deep))
    checks.append(_check_coeff_relations(rng, min(n_max, 8)))
    checks.append(_check_triple_path(rng, 12 if deep else min(n_max, 8)))

    # monogenicity of sampled elements, both families and sides
    samples = [(0, 0), (1, 0), (2, 1), (3, 3), (min(n_max, 5), 1)]
    worst = 0.0
    for n, l in samples:
        if l > n:
            continue
        worst = max(
            worst,
            float(np.max(calculus.fd_dbar(lambda p: basis.appell(n, l, p), ball_pts).norm())),
            float(np.max(calculus.fd_dbar(lambda p: basis.phi(n, l, p), ball_pts).norm())),
            float(np.max(calculus.fd_dbar(lambda p: basis.appell(-(n + 2), l, p), shell_pts).norm())),
            float(np.max(calculus.fd_dbar(lambda p: basis.phi(-(n + 2), l, p), shell_pts).norm())),
        )
    checks.append(_result("basis_monogenicity_fd", worst, 1e-6))

    # the involution produces anti-monogenic functions
    worst = float(
        np.max(
            calculus.fd_dbar_adjoint(
                lambda p: basis.appell_inner_closed(3, 1, p).hat(), ball_pts
            ).norm()
        )
    )
    checks.append(_result("involution_antimonogenicity_fd", worst, 1e-6))

    # Gram matrices: ball identity, sphere |2k+3|, exterior identity
    idx_ball = gram_indices("ball", n_max)
    gram = gram_matrix(idx_ball, quadrature.ball_rule(n_max))
    checks.append(
        _result("ball_gram_identity", gram_deviation(gram, np.ones(len(idx_ball))), 1e-10)
    )

    k_hi = min(n_max, 5)
    idx_sph = gram_indices("sphere", k_hi)
    gram = gram_matrix(idx_sph, quadrature.sphere_rule(2 * (k_hi + 2) + 4))
    diag = np.array([abs(2 * i.k + 3) for i in idx_sph], dtype=float)
    checks.append(_result("sphere_gram_products", gram_deviation(gram, diag), 1e-9))

    n_ext = min(n_max, 4)
    idx_ext = gram_indices("exterior", n_ext)
    gram = gram_matrix(idx_ext, quadrature.exterior_rule(2 * (n_ext + 2)))
    checks.append(
        _result("exterior_gram_identity", gram_deviation(gram, np.ones(len(idx_ext))), 1e-8)
    )

    # derivative index maps against the finite-difference oracle
    worst = 0.0
    k_range = [k for k in range(-(n_max + 2), n_max + 1) if k != -1]
    for k in k_range:
        for l in range(abs(k + 1)):
            pts_k = ball_pts if k >= 0 else shell_pts
            for family in (BasisFamily.PHI, BasisFamily.APPELL):
                action = calculus.basis_derivative(BasisIndex(k, l), family)
                fn = basis.basis_function(BasisIndex(k, l), family)
                fd = calculus.fd_hyper_derivative(fn, pts_k)
                if action.target is None:
                    worst = max(worst, float(np.max(fd.norm())))
                    continue
                target = basis.basis_function(action.target, family)(pts_k)
                scale = max(float(np.max((target * action.factor).norm())), 1e-9)
                worst = max(worst, float(np.max((fd - target * action.factor).norm())) / scale)
    checks.append(_result("derivative_index_map_fd", worst, 1e-5))

    # primitive composes with the derivative to the identity
    worst = 0.0
    for k in k_range:
        for l in range(abs(k + 1)):
            for family in (BasisFamily.PHI, BasisFamily.APPELL):
                try:
                    action = calculus.basis_primitive(BasisIndex(k, l), family)
                except calculus.NoPrimitiveError:
                    continue
                back = calculus.basis_derivative(action.target, family)
                worst = max(worst, abs(back.factor * action.factor - 1.0))
    checks.append(_result("primitive_composes_to_identity", worst, 1e-14))

    # the primitive factor sequence attains its maximum sqrt(3/10) at (0, 0)
    bound = math.sqrt(0.3)
    factors = [
        calculus.basis_primitive(BasisIndex(n, l), BasisFamily.PHI).factor
        for n in range(41)
        for l in range(n + 1)
    ]
    worst = max(max(f - bound for f in factors), 0.0)
    attained = abs(calculus.basis_primitive(BasisIndex(0, 0), BasisFamily.PHI).factor - bound)
    checks.append(_result("primitive_operator_norm_bound", max(worst, attained), 1e-15))

    # Fourier roundtrip on a random coefficient set
    k_lo = 6 if deep else 4
    coeffs = {
        idx: Quaternion(*rng.uniform(-1.0, 1.0, 4)) for idx in series.inner_indices(k_lo)
    }
    s0 = series.SeriesExpansion("fourier", BasisFamily.PHI, coeffs, 0, k_lo)
    recovered = series.fourier_expand(s0.evaluate, k_lo)
    worst = max(float((recovered.coefficient(*idx) - c).norm()) for idx, c in coeffs.items())
    checks.append(_result("fourier_roundtrip", worst, 1e-9))

    lhs, rhs = series.parseval(recovered, s0.evaluate)
    checks.append(_result("parseval_identity", abs(lhs - rhs), 1e-9))

    # Laurent roundtrip with rho-independence
    lcoeffs = {
        idx: Quaternion(*rng.uniform(-1.0, 1.0, 4))
        for idx in series.laurent_indices(-k_lo, k_lo)
    }
    sl = series.SeriesExpansion("laurent", BasisFamily.APPELL, lcoeffs, -k_lo, k_lo)
    worst = 0.0
    for rho in (0.8, 1.0, 1.25):
        rec = series.laurent_expand(sl.evaluate, rho, -k_lo, k_lo)
        worst = max(
            worst,
            max(float((rec.coefficient(*i) - c).norm()) for i, c in lcoeffs.items()),
        )
    checks.append(_result("laurent_roundtrip_rho_independence", worst, 1e-8))

    # Fourier <-> Taylor link: two independent coefficient routes
    via_taylor = series.fourier_from_taylor(series.taylor_coeffs(s0.evaluate, k_lo))
    worst = max(
        float((via_taylor.coefficient(*idx) - recovered.coefficient(*idx)).norm())
        for idx in coeffs
    )
    checks.append(_result("fourier_taylor_link", worst, 1e-8))

    # Cauchy integral formula, inside and outside
    test_fn = basis.basis_function(BasisIndex(3, 1), BasisFamily.APPELL)
    rule_s = quadrature.sphere_rule(40)
    inside = Point3(0.2, 0.1, -0.3)
    outside = Point3(2.0, 0.0, 0.0)
    res_in = float((series.cauchy_integral(test_fn, inside, rule_s) - test_fn(inside)).norm())
    res_out = float(series.cauchy_integral(test_fn, outside, rule_s).norm())
    checks.append(_result("cauchy_integral_formula", max(res_in, res_out), 1e-8))

    # kernel depth by iterating the index map
    worst_depth = 0
    for n in range(min(n_max, 8) + 1):
        for l in range(n + 1):
            idx = BasisIndex(n, l)
            depth = 0
            cursor: BasisIndex | None = idx
            while cursor is not None:
                action = calculus.basis_derivative(cursor, BasisFamily.PHI)
                depth += 1
                cursor = action.target
            worst_depth = max(worst_depth, abs(depth - calculus.kernel_depth(idx)))
    checks.append(_result("kernel_depth_formula", float(worst_depth), 0.5))

    # serialization bit-exact roundtrip
    text = sl.dumps()
    again = series.SeriesExpansion.loads(text).dumps()
    checks.append(_result("serialization_roundtrip", 0.0 if text == again else 1.0, 0.5))

    return checks


def report_dict(n_max: int, seed: int, deep: bool, checks: list[CheckResult]) -> dict:
    return {
        "n_max": n_max,
        "seed": seed,
        "deep": deep,
        "checks": [asdict(c) for c in checks],
        "all_pass": all(c.passed for c in checks),
    }
