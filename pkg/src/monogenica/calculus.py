"""Differential and antiderivative operators on the basis families.

Finite-difference oracles for the generalized Cauchy-Riemann operator, its
adjoint and the hypercomplex derivative; the exact index maps of the
hypercomplex derivative and the primitivation operator on both families;
the symbolic operator on monogenic constants; and the spherical form of
the hypercomplex derivative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .basis import BasisFamily, BasisIndex
from .quaternion import E1, E2, E3, Point3, Quaternion, zeta

__all__ = [
    "NoPrimitiveError",
    "OperatorAction",
    "fd_dbar",
    "fd_dbar_adjoint",
    "fd_hyper_derivative",
    "spherical_hyper_derivative",
    "basis_derivative",
    "basis_primitive",
    "kernel_depth",
    "ZetaPolynomial",
    "dbar_c",
    "fd_dbar_c",
]

DEFAULT_FD_STEP = 1e-5


class NoPrimitiveError(ValueError):
    """The element has no primitive inside its basis.

    Raised for the outer diagonal elements, the analogue of 1/z whose
    complex primitive (the logarithm) lies outside the negative powers.
    """


# ---------------------------------------------------------------------------
# Finite-difference oracles
# ---------------------------------------------------------------------------


def _partials(f: Callable[[Point3], Quaternion], x: Point3, h: float):
    d0 = (f(x.shifted(d0=h)) - f(x.shifted(d0=-h))) / (2.0 * h)
    d1 = (f(x.shifted(d1=h)) - f(x.shifted(d1=-h))) / (2.0 * h)
    d2 = (f(x.shifted(d2=h)) - f(x.shifted(d2=-h))) / (2.0 * h)
    return d0, d1, d2


def fd_dbar(f: Callable[[Point3], Quaternion], x: Point3, h: float = DEFAULT_FD_STEP) -> Quaternion:
    """Central-difference generalized Cauchy-Riemann operator, from the left.

    dbar f = df/dx0 + e1 df/dx1 + e2 df/dx2, O(h^2) accurate; vanishes on
    monogenic functions.
    """
    d0, d1, d2 = _partials(f, x, h)
    return d0 + E1 * d1 + E2 * d2


def fd_dbar_adjoint(
    f: Callable[[Point3], Quaternion], x: Point3, h: float = DEFAULT_FD_STEP
) -> Quaternion:
    """Adjoint operator df/dx0 - e1 df/dx1 - e2 df/dx2; vanishes on anti-monogenic f."""
    d0, d1, d2 = _partials(f, x, h)
    return d0 - E1 * d1 - E2 * d2


def fd_hyper_derivative(
    f: Callable[[Point3], Quaternion], x: Point3, h: float = DEFAULT_FD_STEP
) -> Quaternion:
    """Hypercomplex derivative, one half of the adjoint operator."""
    return fd_dbar_adjoint(f, x, h) * 0.5


def spherical_hyper_derivative(
    f: Callable[..., Quaternion], r, theta, phi, h: float = DEFAULT_FD_STEP
) -> Quaternion:
    """Hypercomplex derivative assembled in spherical coordinates.

    Uses (omega-bar d/dr + L-bar / r) / 2 with central differences in
    r, theta and phi of the function f(r, theta, phi).  Requires r > 0 and
    theta bounded away from the poles (sin(theta) appears in L-bar).
    """
    r = np.asarray(r, dtype=float)
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    if np.any(r <= 0):
        raise ValueError("spherical derivative requires r > 0")
    if np.any(np.minimum(theta, np.pi - theta) < 10 * h):
        raise ValueError("theta too close to a coordinate pole for the stencil")

    st, ct = np.sin(theta), np.cos(theta)
    sp, cp = np.sin(phi), np.cos(phi)
    omega_bar = Quaternion(ct, -st * cp, -st * sp, 0.0)

    df_dr = (f(r + h, theta, phi) - f(r - h, theta, phi)) / (2.0 * h)
    df_dth = (f(r, theta + h, phi) - f(r, theta - h, phi)) / (2.0 * h)
    df_dph = (f(r, theta, phi + h) - f(r, theta, phi - h)) / (2.0 * h)

    theta_factor = Quaternion(-st, -ct * cp, -ct * sp, 0.0)
    phi_factor = Quaternion(0.0, sp / st, -cp / st, 0.0)
    l_bar = theta_factor * df_dth + phi_factor * df_dph
    return (omega_bar * df_dr + l_bar * (1.0 / r)) * 0.5


# ---------------------------------------------------------------------------
# Exact index maps
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OperatorAction:
    """Action of an operator on one basis element: factor * target (or 0)."""

    source: BasisIndex
    target: Optional[BasisIndex]
    factor: float


def _phi_derivative_factor(k: int, l: int) -> float:
    sign = 1.0 if k > 0 else -1.0
    inside = (2 * k + 3) * (k - l) * (k + l + 1) / (2 * k + 1)
    return sign * math.sqrt(inside)


def basis_derivative(idx: BasisIndex, family: BasisFamily) -> OperatorAction:
    """Index map of the hypercomplex derivative on one basis element.

    phi family: factor sign(k) sqrt((2k+3)(k-l)(k+l+1)/(2k+1)), target
    (k-1, l).  Appell family: factor k, target (k-1, l).  Inner diagonal
    elements (l = k) are monogenic constants and map to zero.
    """
    idx = BasisIndex(*idx).validate()
    k, l = idx
    if k >= 0 and l == k:
        return OperatorAction(idx, None, 0.0)
    target = BasisIndex(k - 1, l).validate()
    if family is BasisFamily.APPELL:
        return OperatorAction(idx, target, float(k))
    return OperatorAction(idx, target, _phi_derivative_factor(k, l))


def basis_primitive(idx: BasisIndex, family: BasisFamily) -> OperatorAction:
    """Index map of the primitivation operator on one basis element.

    phi family: factor sign(k) sqrt((2k+3)/((2k+5)(k-l+1)(k+l+2))), target
    (k+1, l); Appell family: factor 1/(k+1), target (k+1, l).  Composing
    with :func:`basis_derivative` at the target gives factor product 1.
    Outer diagonal elements (k <= -2, l = |k+1|-1) raise
    :class:`NoPrimitiveError`.
    """
    idx = BasisIndex(*idx).validate()
    k, l = idx
    if k <= -2 and l == abs(k + 1) - 1:
        raise NoPrimitiveError(
            f"element (k={k}, l={l}) has no primitive inside the basis"
        )
    target = BasisIndex(k + 1, l).validate()
    if family is BasisFamily.APPELL:
        return OperatorAction(idx, target, 1.0 / (k + 1))
    sign = 1.0 if k > 0 else (-1.0 if k < 0 else 1.0)
    inside = (2 * k + 3) / ((2 * k + 5) * (k - l + 1) * (k + l + 2))
    return OperatorAction(idx, target, sign * math.sqrt(inside))


def kernel_depth(idx: BasisIndex) -> int:
    """Smallest d with the d-fold hypercomplex derivative of the element zero.

    Inner elements only: depth n - l + 1.  Outer elements never reach the
    kernel, which is reported as unsupported.
    """
    idx = BasisIndex(*idx).validate()
    if not idx.is_inner:
        raise ValueError("kernel depth is infinite for outer elements")
    return idx.k - idx.l + 1


# ---------------------------------------------------------------------------
# Monogenic constants and the operator acting on them
# ---------------------------------------------------------------------------


class ZetaPolynomial:
    """Finite right-linear combination sum_p zeta^p * c_p of monogenic constants."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, Quaternion] | None = None):
        self.coeffs: dict[int, Quaternion] = {}
        for p, c in (coeffs or {}).items():
            if not isinstance(p, (int, np.integer)) or p < 0:
                raise ValueError("zeta powers must be nonnegative integers")
            if not isinstance(c, Quaternion):
                c = Quaternion(c)
            if c.norm_sq() != 0.0:
                self.coeffs[int(p)] = c

    @classmethod
    def monomial(cls, p: int, c=1.0) -> "ZetaPolynomial":
        return cls({p: c if isinstance(c, Quaternion) else Quaternion(c)})

    def evaluate(self, x: Point3) -> Quaternion:
        z = zeta(x)
        out = Quaternion(0.0)
        for p, c in self.coeffs.items():
            out = out + z**p * c
        return out

    def __repr__(self) -> str:
        return f"ZetaPolynomial({self.coeffs!r})"


def dbar_c(p: ZetaPolynomial) -> ZetaPolynomial:
    """Apply (1/2)(d/dx1 + e3 d/dx2) on the zeta-power representation.

    Maps zeta^p c to p zeta^(p-1) c exactly; constants (p = 0) vanish.
    """
    if not isinstance(p, ZetaPolynomial):
        raise TypeError("dbar_c needs the monogenic-constant (zeta-power) representation")
    out: dict[int, Quaternion] = {}
    for power, c in p.coeffs.items():
        if power >= 1:
            out[power - 1] = c * float(power)
    return ZetaPolynomial(out)


def fd_dbar_c(
    f: Callable[[Point3], Quaternion], x: Point3, h: float = DEFAULT_FD_STEP
) -> Quaternion:
    """Finite-difference form of the monogenic-constant operator (cross-check only)."""
    d1 = (f(x.shifted(d1=h)) - f(x.shifted(d1=-h))) / (2.0 * h)
    d2 = (f(x.shifted(d2=h)) - f(x.shifted(d2=-h))) / (2.0 * h)
    return (d1 + E3 * d2) * 0.5
