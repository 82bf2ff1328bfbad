"""Fourier, Taylor-type and Laurent series engines.

A :class:`SeriesExpansion` is a finite coefficient map over basis indices;
coefficients always multiply basis functions from the right (the function
space is a right module).  Coefficients are computed by quadrature: volume
inner products for the Fourier form, sphere integrals against the
reflected partner family for the Taylor and Laurent forms.

Serialization is a JSON document {kind, family, entries: [{k, l, c}]} with
entries ordered by (k, l); floats use shortest-roundtrip formatting, so a
dump/load cycle is bit-exact.  Exactly-zero coefficients are omitted and
read back as absent.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .basis import (
    BasisFamily,
    BasisIndex,
    appell,
    basis_function,
    cauchy_kernel,
    family_convert,
    phi,
)
from .calculus import NoPrimitiveError, basis_derivative, basis_primitive
from .parallel import ordered_map
from .quadrature import (
    QuadratureRule,
    ball_rule,
    inner_product,
    sphere_rule,
    surface_integral_with_element,
)
from .quaternion import Point3, Quaternion

__all__ = [
    "SeriesExpansion",
    "inner_indices",
    "laurent_indices",
    "fourier_expand",
    "derive_series",
    "primitive_series",
    "taylor_coeffs",
    "fourier_from_taylor",
    "taylor_from_fourier",
    "laurent_expand",
    "cauchy_integral",
    "parseval",
    "truncation_errors",
]

KINDS = ("fourier", "taylor", "laurent")


def inner_indices(n_max: int) -> list[BasisIndex]:
    return [BasisIndex(n, l) for n in range(n_max + 1) for l in range(n + 1)]


def laurent_indices(k_min: int, k_max: int) -> list[BasisIndex]:
    if k_min > k_max:
        raise ValueError("need k_min <= k_max")
    out = []
    for k in range(k_min, k_max + 1):
        if k == -1:
            continue
        out.extend(BasisIndex(k, l) for l in range(abs(k + 1)))
    return out


@dataclass(frozen=True)
class SeriesExpansion:
    """Finite expansion sum of basis(k, l) * coefficient over a k-range."""

    kind: str
    family: BasisFamily
    coeffs: dict[BasisIndex, Quaternion] = field(repr=False)
    k_min: int = 0
    k_max: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown series kind {self.kind!r}")
        if self.kind in ("fourier", "taylor") and any(
            idx.k < 0 for idx in self.coeffs
        ):
            raise ValueError(f"{self.kind} series must have k >= 0 only")

    def coefficient(self, k: int, l: int) -> Quaternion:
        return self.coeffs.get(BasisIndex(k, l), Quaternion(0.0))

    def indices(self) -> list[BasisIndex]:
        # evaluation/summation order: increasing |k|, inner before outer, then l
        return sorted(self.coeffs, key=lambda i: (abs(i.k), -i.k, i.l))

    def evaluate(self, x: Point3) -> Quaternion:
        """Sum basis(idx, x) * coeff(idx) in a fixed deterministic order."""
        out = Quaternion(0.0)
        for idx in self.indices():
            value = (
                appell(idx.k, idx.l, x)
                if self.family is BasisFamily.APPELL
                else phi(idx.k, idx.l, x)
            )
            out = out + value * self.coeffs[idx]
        return out

    def scalar_energy(self) -> float:
        """Sum of squared coefficient norms."""
        return float(sum(c.norm_sq() for c in self.coeffs.values()))

    # -- serialization ---------------------------------------------------

    def to_json_dict(self) -> dict:
        entries = []
        for idx in sorted(self.coeffs, key=lambda i: (i.k, i.l)):
            c = self.coeffs[idx]
            if c.norm_sq() == 0.0:
                continue
            entries.append({"k": idx.k, "l": idx.l, "c": [c.a0, c.a1, c.a2, c.a3]})
        return {"kind": self.kind, "family": self.family.value, "entries": entries}

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    @classmethod
    def from_json_dict(cls, doc: dict) -> "SeriesExpansion":
        coeffs = {}
        for entry in doc["entries"]:
            idx = BasisIndex(int(entry["k"]), int(entry["l"])).validate()
            coeffs[idx] = Quaternion(*entry["c"])
        ks = [idx.k for idx in coeffs] or [0]
        return cls(
            kind=doc["kind"],
            family=BasisFamily(doc["family"]),
            coeffs=coeffs,
            k_min=min(ks),
            k_max=max(ks),
        )

    @classmethod
    def loads(cls, text: str) -> "SeriesExpansion":
        return cls.from_json_dict(json.loads(text))


# ---------------------------------------------------------------------------
# Fourier route: volume inner products on the ball
# ---------------------------------------------------------------------------


def fourier_expand(
    f: Callable[[Point3], Quaternion],
    n_max: int,
    rule: QuadratureRule | None = None,
) -> SeriesExpansion:
    """Fourier coefficients <phi_n^l, f> over the unit ball."""
    if rule is None:
        rule = ball_rule(n_max)
    if rule.domain != "ball":
        raise ValueError("Fourier expansion needs a ball rule")
    fv_cache = f(rule.points)

    def coefficient(idx: BasisIndex) -> Quaternion:
        return inner_product(
            basis_function(idx, BasisFamily.PHI), lambda _p: fv_cache, rule
        )

    indices = inner_indices(n_max)
    values = ordered_map(coefficient, indices)
    return SeriesExpansion(
        kind="fourier",
        family=BasisFamily.PHI,
        coeffs=dict(zip(indices, values)),
        k_min=0,
        k_max=n_max,
    )


# ---------------------------------------------------------------------------
# Termwise derivative and primitive
# ---------------------------------------------------------------------------


def derive_series(series: SeriesExpansion) -> SeriesExpansion:
    """Apply the hypercomplex derivative termwise through the index maps.

    Monogenic-constant terms vanish; the result is again an orthogonal
    series in the same family.
    """
    if series.kind == "laurent":
        raise ValueError("termwise derivative is provided for inner (fourier/taylor) series")
    out: dict[BasisIndex, Quaternion] = {}
    for idx, c in series.coeffs.items():
        action = basis_derivative(idx, series.family)
        if action.target is None:
            continue
        add = c * action.factor
        out[action.target] = out.get(action.target, Quaternion(0.0)) + add
    return SeriesExpansion(
        kind=series.kind,
        family=series.family,
        coeffs=out,
        k_min=series.k_min,
        k_max=max(series.k_max - 1, 0),
    )


def primitive_series(series: SeriesExpansion) -> SeriesExpansion:
    """Apply the primitivation operator termwise through the index maps.

    The result has zero coefficient on every monogenic constant, and
    derive_series(primitive_series(s)) == s coefficientwise.
    """
    if series.kind == "laurent":
        raise NoPrimitiveError(
            "Laurent series contain outer diagonal elements with no primitive in the basis"
        )
    out: dict[BasisIndex, Quaternion] = {}
    for idx, c in series.coeffs.items():
        action = basis_primitive(idx, series.family)
        out[action.target] = out.get(action.target, Quaternion(0.0)) + c * action.factor
    return SeriesExpansion(
        kind=series.kind,
        family=series.family,
        coeffs=out,
        k_min=series.k_min,
        k_max=series.k_max + 1,
    )


# ---------------------------------------------------------------------------
# Taylor and Laurent route: sphere integrals against the reflected family
# ---------------------------------------------------------------------------


def _laurent_orders(k_lo: int, k_hi: int) -> int:
    # angular resolution covering products of elements across the k-range
    return max(abs(k_lo), abs(k_hi)) + 2


def _sphere_coefficients(
    f: Callable[[Point3], Quaternion],
    indices: list[BasisIndex],
    rho: float,
    rule: QuadratureRule | None,
) -> dict[BasisIndex, Quaternion]:
    """Shared integration pass for Taylor/Laurent coefficients.

    gamma_{k,l} = |k+1| / (4^(l+1) pi) * integral of
    conj(A_{-(k+2)}^l(y-bar)) dy* f(y) over the rho-sphere.
    """
    if rule is None:
        deg = _laurent_orders(min(i.k for i in indices), max(i.k for i in indices))
        rule = sphere_rule(2 * deg + 8, radius=rho)
    if rule.domain != "sphere":
        raise ValueError("coefficient integrals need a sphere rule")
    fv_cache = f(rule.points)

    def coefficient(idx: BasisIndex) -> Quaternion:
        k, l = idx
        partner = BasisIndex(-(k + 2), l).validate()
        integral = surface_integral_with_element(
            basis_function(partner, BasisFamily.APPELL), lambda _p: fv_cache, rule
        )
        return integral * (abs(k + 1) / (4.0 ** (l + 1) * math.pi))

    values = ordered_map(coefficient, indices)
    return dict(zip(indices, values))


def taylor_coeffs(
    f: Callable[[Point3], Quaternion],
    n_max: int,
    rho: float = 1.0,
    rule: QuadratureRule | None = None,
) -> SeriesExpansion:
    """Taylor coefficients of a function monogenic in a ball of radius > rho."""
    indices = inner_indices(n_max)
    coeffs = _sphere_coefficients(f, indices, rho, rule)
    return SeriesExpansion(
        kind="taylor",
        family=BasisFamily.APPELL,
        coeffs=coeffs,
        k_min=0,
        k_max=n_max,
    )


def laurent_expand(
    f: Callable[[Point3], Quaternion],
    rho: float,
    k_min: int,
    k_max: int,
    family: BasisFamily = BasisFamily.APPELL,
    rule: QuadratureRule | None = None,
) -> SeriesExpansion:
    """Laurent coefficients of f over k in [k_min, k_max] \\ {-1}.

    ``f`` must be monogenic on a shell containing the rho-sphere.  With
    ``family=BasisFamily.PHI`` the orthonormal-variant coefficients are
    returned; both variants come from one integration pass and differ by
    the family conversion factors.
    """
    indices = laurent_indices(k_min, k_max)
    coeffs = _sphere_coefficients(f, indices, rho, rule)
    if family is BasisFamily.PHI:
        coeffs = {idx: c * family_convert(idx.k, idx.l) for idx, c in coeffs.items()}
    return SeriesExpansion(
        kind="laurent",
        family=family,
        coeffs=coeffs,
        k_min=k_min,
        k_max=k_max,
    )


def fourier_from_taylor(t: SeriesExpansion) -> SeriesExpansion:
    """Convert Taylor coefficients to Fourier coefficients, alpha = c(n, l) * t."""
    if t.family is not BasisFamily.APPELL:
        raise ValueError("expected an Appell-family series")
    coeffs = {idx: c * family_convert(idx.k, idx.l) for idx, c in t.coeffs.items()}
    return SeriesExpansion(
        kind="fourier",
        family=BasisFamily.PHI,
        coeffs=coeffs,
        k_min=t.k_min,
        k_max=t.k_max,
    )


def taylor_from_fourier(s: SeriesExpansion) -> SeriesExpansion:
    """Inverse of :func:`fourier_from_taylor`; exact, one-to-one."""
    if s.family is not BasisFamily.PHI:
        raise ValueError("expected an orthonormal-family series")
    coeffs = {idx: c / family_convert(idx.k, idx.l) for idx, c in s.coeffs.items()}
    return SeriesExpansion(
        kind="taylor",
        family=BasisFamily.APPELL,
        coeffs=coeffs,
        k_min=s.k_min,
        k_max=s.k_max,
    )


# ---------------------------------------------------------------------------
# Cauchy integral and Parseval
# ---------------------------------------------------------------------------


def cauchy_integral(
    f: Callable[[Point3], Quaternion],
    x: Point3,
    rule: QuadratureRule,
) -> Quaternion:
    """Cauchy-type surface integral of E_2(y - x) dy* f(y) over a sphere.

    Reproduces f(x) for x inside the sphere (f monogenic inside and
    continuous up to it) and 0 for x outside.
    """
    if rule.domain != "sphere":
        raise ValueError("Cauchy integral needs a sphere rule")
    rho = rule.radii[0]
    if np.any(np.abs(x.norm() - rho) < 1e-12):
        raise ValueError("evaluation point lies on the integration sphere")
    y = rule.points
    kernel = cauchy_kernel(y - x)
    unit = y.to_quaternion() / y.norm()
    prod = kernel * unit * f(y)
    w = rule.weights
    return Quaternion(
        np.sum(w * prod.a0),
        np.sum(w * prod.a1),
        np.sum(w * prod.a2),
        np.sum(w * prod.a3),
    )


def parseval(
    series: SeriesExpansion,
    f: Callable[[Point3], Quaternion],
    rule: QuadratureRule | None = None,
) -> tuple[float, float]:
    """Both sides of Parseval's identity on the ball.

    Returns (sum of |alpha|^2, scalar part of <f, f>).
    """
    if rule is None:
        rule = ball_rule(max(series.k_max, 0))
    lhs = series.scalar_energy()
    rhs = float(inner_product(f, f, rule).a0)
    return lhs, rhs


def truncation_errors(
    f: Callable[[Point3], Quaternion],
    series: SeriesExpansion,
    rule: QuadratureRule,
) -> list[tuple[int, float]]:
    """L2 residual ||f - S_N|| on the rule's domain for N = 0 .. k_max.

    S_N keeps the terms with |k| <= N; computed by direct evaluation of the
    partial sums at the quadrature nodes, independent of how the
    coefficients were obtained.
    """
    pts = rule.points
    w = rule.weights
    fv = f(pts)
    partial = Quaternion(
        np.zeros_like(w), np.zeros_like(w), np.zeros_like(w), np.zeros_like(w)
    )
    n_hi = max(abs(series.k_min), abs(series.k_max))
    by_level: dict[int, list[BasisIndex]] = {}
    for idx in series.indices():
        by_level.setdefault(abs(idx.k), []).append(idx)
    out = []
    for level in range(n_hi + 1):
        for idx in by_level.get(level, []):
            value = (
                appell(idx.k, idx.l, pts)
                if series.family is BasisFamily.APPELL
                else phi(idx.k, idx.l, pts)
            )
            partial = partial + value * series.coeffs[idx]
        diff = fv - partial
        out.append((level, math.sqrt(max(float(np.sum(w * diff.norm_sq())), 0.0))))
    return out
