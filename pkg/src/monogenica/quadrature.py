"""Product quadrature on the unit ball, spheres and spherical shells.

Rules combine Gauss-Legendre nodes in the radius and in cos(theta) with a
uniform (periodic trapezoid) rule in phi, and carry the volume or surface
measure in their weights.  The radial direction of a shell may be mapped
through u = 1/r, which makes integrands that decay algebraically at
infinity polynomial in u; exterior-domain inner products use a shell
(1, 1e12) in that map, so the neglected tail is below 1e-12 for every
basis pair while the quadrature itself stays exact.

Node batches are stored as a single :class:`Point3` with array components;
summation uses numpy's pairwise reduction in a fixed node order, so results
are deterministic run to run.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .quaternion import Point3, Quaternion

__all__ = [
    "gauss_legendre",
    "QuadratureRule",
    "build_rule",
    "ball_rule",
    "sphere_rule",
    "shell_rule",
    "exterior_rule",
    "default_orders",
    "inner_product",
    "norm_l2",
    "surface_integral_with_element",
]

EXTERIOR_RADIUS = 1e12


def gauss_legendre(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights on (-1, 1).

    Newton iteration on the Legendre polynomial from the Chebyshev-like
    initial guess, converged to 1e-15; deterministic across runs.
    """
    if n < 1:
        raise ValueError("need at least one node")

    def legendre_pair(x):
        # returns (P_n(x), P_{n-1}(x))
        p_prev = np.ones_like(x)
        p = x.copy()
        for j in range(1, n):
            p, p_prev = ((2 * j + 1) * x * p - j * p_prev) / (j + 1), p
        return p, p_prev

    if n == 1:
        return np.array([0.0]), np.array([2.0])
    i = np.arange(n)
    x = np.cos(math.pi * (i + 0.75) / (n + 0.5))
    for _ in range(100):
        p, p_prev = legendre_pair(x)
        dp = n * (x * p - p_prev) / (x * x - 1.0)
        dx = p / dp
        x = x - dx
        if np.max(np.abs(dx)) < 1e-15:
            break
    p, p_prev = legendre_pair(x)
    dp = n * (x * p - p_prev) / (x * x - 1.0)
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    order = np.argsort(x)
    return x[order], w[order]


def _mapped_gauss(n: int, a: float, b: float) -> tuple[np.ndarray, np.ndarray]:
    x, w = gauss_legendre(n)
    half = 0.5 * (b - a)
    return a + half * (x + 1.0), half * w


@dataclass(frozen=True)
class QuadratureRule:
    """Immutable node/weight set over a ball, sphere or spherical shell."""

    domain: str  # "ball" | "sphere" | "shell"
    radii: tuple[float, ...]
    points: Point3 = field(repr=False)
    weights: np.ndarray = field(repr=False)
    orders: tuple[int, int, int]

    def __len__(self) -> int:
        return self.weights.size

    @property
    def measure(self) -> float:
        """Lebesgue measure of the domain (volume, or area for a sphere)."""
        if self.domain == "ball":
            return 4.0 * math.pi * self.radii[0] ** 3 / 3.0
        if self.domain == "sphere":
            return 4.0 * math.pi * self.radii[0] ** 2
        r_in, r_out = self.radii
        return 4.0 * math.pi * (r_out**3 - r_in**3) / 3.0


def _angular_grid(n_theta: int, n_phi: int):
    t, wt = gauss_legendre(n_theta)
    phi = 2.0 * math.pi * np.arange(n_phi) / n_phi
    wphi = 2.0 * math.pi / n_phi
    st = np.sqrt(1.0 - t * t)
    # broadcast (theta x phi), flattened in a fixed order
    ct = np.repeat(t, n_phi)
    stf = np.repeat(st, n_phi)
    wtf = np.repeat(wt, n_phi) * wphi
    cph = np.tile(np.cos(phi), n_theta)
    sph = np.tile(np.sin(phi), n_theta)
    return ct, stf, cph, sph, wtf


def _assemble(r, wr, ct, stf, cph, sph, wang, orders, domain, radii) -> QuadratureRule:
    # outer product of radial and angular grids, radial index slowest
    n_r, n_ang = r.size, ct.size
    rr = np.repeat(r, n_ang)
    ww = np.repeat(wr, n_ang) * np.tile(wang, n_r)
    ctf = np.tile(ct, n_r)
    stff = np.tile(stf, n_r)
    cphf = np.tile(cph, n_r)
    sphf = np.tile(sph, n_r)
    points = Point3(rr * ctf, rr * stff * cphf, rr * stff * sphf)
    return QuadratureRule(
        domain=domain,
        radii=radii,
        points=points,
        weights=ww,
        orders=(n_r,) + orders,
    )


def build_rule(
    domain: str,
    n_r: int = 1,
    n_theta: int = 8,
    n_phi: int = 16,
    *,
    radius: float = 1.0,
    r_in: float = 0.0,
    r_out: float = 1.0,
    reciprocal_radial: bool = False,
) -> QuadratureRule:
    """Build a product rule over the requested domain.

    Gauss-Legendre in the radius (weighted by r^2) and in cos(theta);
    uniform trapezoid in phi, exact for trigonometric degree n_phi - 1.
    ``reciprocal_radial`` maps the radial rule through u = 1/r (shells only),
    suited to integrands decaying at large radius.
    """
    if min(n_r, n_theta, n_phi) < 1:
        raise ValueError("quadrature orders must be >= 1")
    ct, stf, cph, sph, wang = _angular_grid(n_theta, n_phi)
    if domain == "sphere":
        rule = _assemble(
            np.array([radius]),
            np.array([radius**2]),
            ct, stf, cph, sph, wang,
            (n_theta, n_phi),
            "sphere",
            (radius,),
        )
        return rule
    if domain == "ball":
        r, wr = _mapped_gauss(n_r, 0.0, radius)
        return _assemble(
            r, wr * r * r, ct, stf, cph, sph, wang, (n_theta, n_phi), "ball", (radius,)
        )
    if domain == "shell":
        if not 0.0 <= r_in < r_out:
            raise ValueError("need 0 <= r_in < r_out")
        if reciprocal_radial:
            if r_in <= 0.0:
                raise ValueError("reciprocal radial map needs r_in > 0")
            u, wu = _mapped_gauss(n_r, 1.0 / r_out, 1.0 / r_in)
            r = 1.0 / u
            wr = wu * r**4  # dr = du/u^2 and the r^2 volume factor
        else:
            r, wr = _mapped_gauss(n_r, r_in, r_out)
            wr = wr * r * r
        return _assemble(
            r, wr, ct, stf, cph, sph, wang, (n_theta, n_phi), "shell", (r_in, r_out)
        )
    raise ValueError(f"unknown domain {domain!r}")


def default_orders(n_max: int) -> tuple[int, int, int]:
    """Orders making basis-pair integrands up to degree n_max exact."""
    return (n_max + 4, n_max + 4, 2 * n_max + 4)


def ball_rule(n_max: int, radius: float = 1.0) -> QuadratureRule:
    n_r, n_theta, n_phi = default_orders(n_max)
    return build_rule("ball", n_r, n_theta, n_phi, radius=radius)


def sphere_rule(n_max: int, radius: float = 1.0) -> QuadratureRule:
    _, n_theta, n_phi = default_orders(n_max)
    return build_rule("sphere", 1, n_theta, n_phi, radius=radius)


def shell_rule(n_max: int, r_in: float, r_out: float) -> QuadratureRule:
    n_r, n_theta, n_phi = default_orders(n_max)
    return build_rule("shell", n_r, n_theta, n_phi, r_in=r_in, r_out=r_out)


def exterior_rule(n_max: int, r_outer: float = EXTERIOR_RADIUS) -> QuadratureRule:
    """Rule for L2 inner products over the exterior of the unit ball.

    A shell (1, r_outer) in the reciprocal radial map: basis-pair
    integrands become polynomials in u = 1/r (integrated exactly), and the
    discarded tail beyond r_outer is at most 1/r_outer of the integral.
    """
    n_r, n_theta, n_phi = default_orders(n_max)
    return build_rule(
        "shell", n_r, n_theta, n_phi, r_in=1.0, r_out=r_outer, reciprocal_radial=True
    )


def inner_product(
    f: Callable[[Point3], Quaternion],
    g: Callable[[Point3], Quaternion],
    rule: QuadratureRule,
) -> Quaternion:
    """H-valued inner product: sum of w * conj(f(x)) * g(x) over the nodes.

    The conjugate-first ordering is preserved; the result is generally not
    symmetric in f and g.
    """
    fv = f(rule.points)
    gv = g(rule.points)
    prod = fv.conj() * gv
    w = rule.weights
    return Quaternion(
        np.sum(w * prod.a0),
        np.sum(w * prod.a1),
        np.sum(w * prod.a2),
        np.sum(w * prod.a3),
    )


def norm_l2(f: Callable[[Point3], Quaternion], rule: QuadratureRule) -> float:
    value = inner_product(f, f, rule)
    return math.sqrt(max(float(value.a0), 0.0))


def surface_integral_with_element(
    a: Callable[[Point3], Quaternion],
    f: Callable[[Point3], Quaternion],
    rule: QuadratureRule,
) -> Quaternion:
    """Integral of conj(a(y-bar)) dy* f(y) over a sphere, dy* = (y/|y|) dsigma.

    The three-factor product conj(a(conj(y))) * (y/|y|) * f(y) is taken in
    exactly this order at every node.
    """
    if rule.domain != "sphere":
        raise ValueError("surface integral needs a sphere rule")
    y = rule.points
    av = a(y.conj())
    fv = f(y)
    unit = y.to_quaternion() / y.norm()
    prod = av.conj() * unit * fv
    w = rule.weights
    return Quaternion(
        np.sum(w * prod.a0),
        np.sum(w * prod.a1),
        np.sum(w * prod.a2),
        np.sum(w * prod.a3),
    )
