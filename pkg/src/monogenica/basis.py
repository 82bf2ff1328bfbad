"""Solid spherical monogenic basis families on ball and exterior domain.

Two families are provided, addressed by a signed homogeneity degree
k in Z \\ {-1} and a column index l with 0 <= l <= |k+1| - 1:

* the orthonormal family ``phi`` (unit L2 norm on the unit ball for
  k >= 0, on the exterior domain for k <= -2), and
* the Appell family ``A`` with hypercomplex derivative k * A_{k-1}^l.

Inner elements (k = n >= 0) are homogeneous monogenic polynomials of
degree n; outer elements (k = -(n+2)) are homogeneous of degree -(n+2) on
R^3 \\ {0} and arise from the inner ones by the Kelvin transformation.

The production evaluation path is the Cartesian closed form of the Appell
polynomials (no trigonometric poles); the spherical construction from
X/Y spherical monogenics and the two-step recurrence are kept as
independent cross-validation routes.
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from typing import Callable, NamedTuple

import numpy as np

from .legendre import legendre_sin_ratio_table, legendre_table
from .quaternion import E1, E2, E3, Point3, Quaternion, zeta

__all__ = [
    "BasisIndex",
    "BasisFamily",
    "PoleError",
    "coeff_functions",
    "spherical_xy",
    "solid_xy",
    "solid_xy_norm",
    "phi_inner",
    "phi_inner_spherical",
    "appell_inner_closed",
    "appell_inner_recur",
    "kelvin",
    "phi_outer",
    "appell_outer",
    "appell_outer_x0route",
    "cauchy_kernel",
    "family_convert",
    "appell",
    "phi",
    "basis_function",
]


class PoleError(ValueError):
    """Evaluation of an outer function at its pole x = 0."""


class BasisIndex(NamedTuple):
    """Signed homogeneity degree k (k != -1) and column index l."""

    k: int
    l: int

    @property
    def is_inner(self) -> bool:
        return self.k >= 0

    @property
    def n(self) -> int:
        """Nonnegative degree parameter: k for inner, -(k+2) for outer."""
        return self.k if self.k >= 0 else -self.k - 2

    def validate(self) -> "BasisIndex":
        if self.k == -1:
            raise ValueError("degree k = -1 does not address a basis function")
        if not 0 <= self.l <= abs(self.k + 1) - 1:
            raise ValueError(f"column l={self.l} out of range for degree k={self.k}")
        return self


class BasisFamily(Enum):
    PHI = "phi"
    APPELL = "appell"


# ---------------------------------------------------------------------------
# Spherical construction: coefficient functions and X/Y spherical monogenics
# ---------------------------------------------------------------------------


def coeff_functions(n: int, m: int, theta):
    """Coefficient functions (A, B, C) of the spherical monogenics X_n^m, Y_n^m.

    The displayed definitions are

        A = (sin^2(t) P'_{n+1}^m(cos t) + (n+1) cos(t) P_{n+1}^m(cos t)) / 2
        B = (sin(t) cos(t) P'_{n+1}^m(cos t) - (n+1) sin(t) P_{n+1}^m(cos t)) / 2
        C = m P_{n+1}^m(cos t) / (2 sin(t))

    evaluated here in pole-safe form: the degree recurrence turns A into
    (n+m+1) P_n^m / 2, C uses the sin-scaled Legendre table, and B follows
    from the cross-relation A^{m+1,n} = (n+m+2)(B^{m,n} + C^{m,n}).
    """
    if not 0 <= m <= n + 1:
        raise ValueError(f"require 0 <= m <= n+1, got n={n}, m={m}")
    theta = np.asarray(theta, dtype=float)
    t = np.cos(theta)
    table = legendre_table(n + 1, t)
    ratio = legendre_sin_ratio_table(n + 1, t)

    p_n_m = table.values[n, m] if m <= n else np.zeros_like(t)
    p_n_m1 = table.values[n, m + 1] if m + 1 <= n else np.zeros_like(t)
    a = 0.5 * (n + m + 1) * p_n_m
    c = 0.5 * m * ratio[n + 1, m] if m >= 1 else np.zeros_like(t)
    b = 0.5 * p_n_m1 - c
    return a, b, c


def spherical_xy(n: int, j: int, theta, phi, kind: str = "X") -> Quaternion:
    """Spherical monogenic X_n^j (kind="X") or Y_n^j (kind="Y").

    Ranges: 0 <= j <= n+1 for X, 1 <= j <= n+1 for Y.  The value has zero
    e3 component.
    """
    if kind not in ("X", "Y"):
        raise ValueError("kind must be 'X' or 'Y'")
    if kind == "X" and not 0 <= j <= n + 1:
        raise ValueError(f"X index j={j} out of range for n={n}")
    if kind == "Y" and not 1 <= j <= n + 1:
        raise ValueError(f"Y index j={j} out of range for n={n}")
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    a, b, c = coeff_functions(n, j, theta)
    cj, sj = np.cos(j * phi), np.sin(j * phi)
    c1, s1 = np.cos(phi), np.sin(phi)
    if kind == "X":
        return Quaternion(a * cj, b * c1 * cj - c * s1 * sj, b * s1 * cj + c * c1 * sj, 0.0)
    return Quaternion(a * sj, b * c1 * sj + c * s1 * cj, b * s1 * sj - c * c1 * cj, 0.0)


def solid_xy(n: int, j: int, x: Point3, kind: str = "X") -> Quaternion:
    """Solid spherical monogenic r^n X_n^j (or r^n Y_n^j) at the point x."""
    r, theta, phi = x.spherical()
    value = spherical_xy(n, j, theta, phi, kind)
    return value * r**n if n > 0 else value


def solid_xy_norm(n: int, m: int) -> float:
    """L2(unit ball) norm of r^n X_n^m (equal to that of r^n Y_n^m for m >= 1)."""
    if m == 0:
        return math.sqrt(math.pi * (n + 1) / (2 * n + 3))
    frac = Fraction(
        math.factorial(n + m + 1) * (n + 1),
        2 * (2 * n + 3) * math.factorial(n - m + 1),
    )
    return math.sqrt(math.pi * float(frac))


def _c_nl(n: int, l: int) -> float:
    # combination coefficient of the orthonormal system
    return math.sqrt((n + 1) / (2.0 * (n - l + 1)))


def phi_inner_spherical(n: int, l: int, x: Point3) -> Quaternion:
    """Inner orthonormal element built literally from normalized X/Y parts.

    Cross-validation route; :func:`phi_inner` is the production evaluator.
    """
    BasisIndex(n, l).validate()
    if l == 0:
        return solid_xy(n, 0, x, "X") / solid_xy_norm(n, 0)
    norm = solid_xy_norm(n, l)
    x_part = solid_xy(n, l, x, "X") / norm
    y_part = (solid_xy(n, l, x, "Y") * E3) / norm
    return (x_part - y_part) * _c_nl(n, l)


# ---------------------------------------------------------------------------
# Appell family: closed form and recurrences
# ---------------------------------------------------------------------------


def _closed_form_coeffs(n: int, l: int) -> list[float]:
    """Exact coefficients of the x-bar/x powers in the closed factorization.

    Coefficient h multiplies xbar^h x^(n-l-h); computed as exact rationals
    so the diagonal case reduces to A_l^l = zeta^l with coefficient 1.0.
    """
    f = math.factorial
    out = []
    for h in range(n - l + 1):
        num = f(n) * f(l) * f(2 * n - 2 * h + 1) * f(2 * l + 2 * h)
        den = (
            4 ** (n - l)
            * f(n + l + 1)
            * f(2 * l)
            * f(h)
            * f(n - l - h)
            * f(n - h)
            * f(l + h)
        )
        out.append(float(Fraction(num, den)))
    return out


def appell_inner_closed(n: int, l: int, x: Point3) -> Quaternion:
    """Appell polynomial A_n^l via the Cartesian closed factorization.

    A_n^l = [sum_h c_h xbar^h x^(n-l-h)] * zeta^l with zeta = x1 - x2 e3.
    """
    BasisIndex(n, l).validate()
    xq = x.to_quaternion()
    xbar = xq.conj()
    coeffs = _closed_form_coeffs(n, l)
    # powers x^(n-l-h) accumulated downward, xbar^h upward
    x_powers = [Quaternion(1.0)]
    for _ in range(n - l):
        x_powers.append(x_powers[-1] * xq)
    acc = Quaternion(0.0)
    xbar_pow = Quaternion(1.0)
    for h, c_h in enumerate(coeffs):
        acc = acc + (xbar_pow * x_powers[n - l - h]) * c_h
        if h < n - l:
            xbar_pow = xbar_pow * xbar
    return acc * zeta(x) ** l


def appell_inner_recur(n: int, l: int, x: Point3, one_step: bool = False) -> Quaternion:
    """Appell polynomial A_n^l by recurrence in the degree.

    The default two-step recurrence uses only monogenic values:

        A_{j+1}^l = (j+1)/(2(j-l+1)(j+l+2)) [((2j+3)x + (2j+1)xbar) A_j^l
                                              - 2j x xbar A_{j-1}^l]

    with seeds A_l^l = zeta^l and A_{l+1}^l = ((2l+3)x + (2l+1)xbar) zeta^l / 4.
    With ``one_step=True`` the anti-monogenic involution variant is used:

        A_{j+1}^l = (j+1)/(2(j-l+1)(j+l+2)) [(2j+3) x A_j^l + (2l+1) xbar hat(A_j^l)].
    """
    BasisIndex(n, l).validate()
    xq = x.to_quaternion()
    xbar = xq.conj()
    prev = zeta(x) ** l
    if n == l:
        return prev
    if one_step:
        cur = prev
        for j in range(l, n):
            cur = (xq * cur * (2 * j + 3) + xbar * cur.hat() * (2 * l + 1)) * (
                (j + 1) / (2.0 * (j - l + 1) * (j + l + 2))
            )
        return cur
    cur = (xq * (2 * l + 3) + xbar * (2 * l + 1)) * prev * 0.25
    if n == l + 1:
        return cur
    xxbar = xq.norm_sq()
    for j in range(l + 1, n):
        nxt = (
            (xq * (2 * j + 3) + xbar * (2 * j + 1)) * cur - prev * (xxbar * (2 * j))
        ) * ((j + 1) / (2.0 * (j - l + 1) * (j + l + 2)))
        prev, cur = cur, nxt
    return cur


# ---------------------------------------------------------------------------
# Conversion factors, Kelvin transformation and the outer families
# ---------------------------------------------------------------------------


def family_convert(k: int, l: int) -> float:
    """Positive factor c with A_k^l = c * phi_k^l at the same index."""
    BasisIndex(k, l).validate()
    f = math.factorial
    if k >= 0:
        n = k
        frac = Fraction(
            4 ** (l + 1) * f(n) ** 2,
            (2 * n + 3) * f(n - l) * f(n + l + 1),
        )
    else:
        n = -k - 2
        frac = Fraction(
            4 ** (l + 1) * f(n - l) * f(n + l + 1),
            (2 * n + 1) * f(n + 1) ** 2,
        )
    return math.sqrt(math.pi * float(frac))


def phi_inner(n: int, l: int, x: Point3) -> Quaternion:
    """Inner orthonormal basis element phi_n^l (production route)."""
    return appell_inner_closed(n, l, x) / family_convert(n, l)


def kelvin(f: Callable[[Point3], Quaternion], x: Point3) -> Quaternion:
    """Kelvin transformation (xbar/|x|^3) f(xbar/|x|^2); pole at x = 0."""
    r2 = x.norm_sq()
    if np.any(r2 == 0.0):
        raise PoleError("Kelvin transformation has a pole at x = 0")
    inv_point = Point3(x.x0 / r2, -x.x1 / r2, -x.x2 / r2)
    factor = x.conj().to_quaternion() / (r2 * np.sqrt(r2))
    return factor * f(inv_point)


def phi_outer(n: int, l: int, x: Point3) -> Quaternion:
    """Outer orthonormal element of homogeneity -(n+2), via the Kelvin route."""
    BasisIndex(n, l).validate()
    scale = math.sqrt((2 * n + 1) / (2 * n + 3))
    return kelvin(lambda p: phi_inner(n, l, p), x) * scale


def appell_outer(n: int, l: int, x: Point3) -> Quaternion:
    """Outer Appell element A_{-(n+2)}^l.

    Kelvin route scaled by (n+l+1)!(n-l)!/(n!(n+1)!); on the diagonal l = n
    the closed form (-1)^n (2n+1)!/(n!(n+1)!) xbar zeta^n / |x|^(2n+3) is used.
    """
    BasisIndex(n, l).validate()
    f = math.factorial
    if l == n:
        r2 = x.norm_sq()
        if np.any(r2 == 0.0):
            raise PoleError("outer basis function has a pole at x = 0")
        scale = float(Fraction((-1) ** n * f(2 * n + 1), f(n) * f(n + 1)))
        return (x.conj().to_quaternion() * zeta(x) ** n) * (scale / r2 ** (n + 1.5))
    scale = float(Fraction(f(n + l + 1) * f(n - l), f(n) * f(n + 1)))
    return kelvin(lambda p: appell_inner_closed(n, l, p), x) * scale


def _x0_derivative_terms(l: int, order: int) -> dict[tuple[int, int, int], float]:
    """Repeated d/dx0 of xbar/|x|^(2l+3), on monomials x0^a xbar^b |x|^(-m).

    Returns {(a, b, m): coefficient}; b stays in {0, 1} because the
    x0-derivative of xbar is the real constant 1.
    """
    terms = {(0, 1, 2 * l + 3): 1.0}
    for _ in range(order):
        nxt: dict[tuple[int, int, int], float] = {}

        def add(key, value):
            nxt[key] = nxt.get(key, 0.0) + value

        for (a, b, m), coeff in terms.items():
            if a > 0:
                add((a - 1, b, m), coeff * a)
            if b > 0:
                add((a, b - 1, m), coeff * b)
            add((a + 1, b, m + 2), -coeff * m)
        terms = nxt
    return terms


def appell_outer_x0route(n: int, l: int, x: Point3) -> Quaternion:
    """Outer Appell element generated by x0-derivatives of xbar/|x|^(2l+3).

    Independent of the Kelvin transformation; exact symbolic differentiation
    on the closed term algebra, used to cross-check :func:`appell_outer`.
    """
    BasisIndex(n, l).validate()
    r2 = x.norm_sq()
    if np.any(r2 == 0.0):
        raise PoleError("outer basis function has a pole at x = 0")
    r = np.sqrt(r2)
    xbar = x.conj().to_quaternion()
    acc = Quaternion(0.0)
    for (a, b, m), coeff in _x0_derivative_terms(l, n - l).items():
        field = coeff * x.x0**a * r ** (-float(m))
        acc = acc + (xbar * field if b else Quaternion(field))
    f = math.factorial
    scale = float(Fraction((-1) ** n * f(2 * l + 1), f(l) * f(n + 1)))
    return (acc * zeta(x) ** l) * scale


def cauchy_kernel(x: Point3) -> Quaternion:
    """Cauchy kernel E_2(x) = xbar / (4 pi |x|^3)."""
    r2 = x.norm_sq()
    if np.any(r2 == 0.0):
        raise PoleError("Cauchy kernel has a pole at x = 0")
    return x.conj().to_quaternion() / (4.0 * math.pi * r2 * np.sqrt(r2))


# ---------------------------------------------------------------------------
# Signed-degree dispatchers
# ---------------------------------------------------------------------------


def appell(k: int, l: int, x: Point3) -> Quaternion:
    """Appell element A_k^l for signed degree k (inner k >= 0, outer k <= -2)."""
    idx = BasisIndex(k, l).validate()
    if idx.is_inner:
        return appell_inner_closed(k, l, x)
    return appell_outer(idx.n, l, x)


def phi(k: int, l: int, x: Point3) -> Quaternion:
    """Orthonormal element phi_k^l for signed degree k."""
    idx = BasisIndex(k, l).validate()
    if idx.is_inner:
        return phi_inner(k, l, x)
    return phi_outer(idx.n, l, x)


def basis_function(idx: BasisIndex, family: BasisFamily) -> Callable[[Point3], Quaternion]:
    """Evaluator closure for one basis element."""
    idx = BasisIndex(*idx).validate()
    if family is BasisFamily.APPELL:
        return lambda p: appell(idx.k, idx.l, p)
    return lambda p: phi(idx.k, idx.l, p)
