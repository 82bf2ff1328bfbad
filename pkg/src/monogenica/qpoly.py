"""Polynomials in (x0, x1, x2) with quaternion coefficients.

A small exact-algebra layer: monomials are real and therefore central, so a
product of two polynomials multiplies coefficients in their written order
and adds exponents.  Used to verify basis identities at the coefficient
level and to apply the differential operators symbolically.
"""

from __future__ import annotations

from .quaternion import E1, E2, E3, Quaternion

__all__ = ["QPoly", "x_poly", "xbar_poly", "zeta_poly"]


def _is_zero(q: Quaternion) -> bool:
    return q.a0 == 0.0 and q.a1 == 0.0 and q.a2 == 0.0 and q.a3 == 0.0


class QPoly:
    """Finite sum of monomials x0^a * x1^b * x2^c with Quaternion coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[tuple[int, int, int], Quaternion] = {}
        if terms:
            for mono, coeff in terms.items():
                if not _is_zero(coeff):
                    self.terms[mono] = coeff

    @classmethod
    def constant(cls, q) -> "QPoly":
        if not isinstance(q, Quaternion):
            q = Quaternion(q)
        return cls({(0, 0, 0): q})

    def __add__(self, other: "QPoly") -> "QPoly":
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out[mono] + coeff if mono in out else coeff
        return QPoly(out)

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + other.scaled(-1.0)

    def __mul__(self, other: "QPoly") -> "QPoly":
        out: dict[tuple[int, int, int], Quaternion] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                prod = c1 * c2
                out[mono] = out[mono] + prod if mono in out else prod
        return QPoly(out)

    def scaled(self, s: float) -> "QPoly":
        return QPoly({m: c * s for m, c in self.terms.items()})

    def lmul(self, q: Quaternion) -> "QPoly":
        """Multiply every coefficient by ``q`` from the left."""
        return QPoly({m: q * c for m, c in self.terms.items()})

    def rmul(self, q: Quaternion) -> "QPoly":
        """Multiply every coefficient by ``q`` from the right."""
        return QPoly({m: c * q for m, c in self.terms.items()})

    def power(self, n: int) -> "QPoly":
        out = QPoly.constant(1.0)
        for _ in range(n):
            out = out * self
        return out

    def diff(self, var: int) -> "QPoly":
        out: dict[tuple[int, int, int], Quaternion] = {}
        for mono, coeff in self.terms.items():
            e = mono[var]
            if e == 0:
                continue
            new = list(mono)
            new[var] = e - 1
            out[tuple(new)] = coeff * float(e)
        return QPoly(out)

    def dbar(self) -> "QPoly":
        """Generalized Cauchy-Riemann operator d/dx0 + e1 d/dx1 + e2 d/dx2 from the left."""
        return self.diff(0) + self.diff(1).lmul(E1) + self.diff(2).lmul(E2)

    def dbar_adjoint(self) -> "QPoly":
        return self.diff(0) - self.diff(1).lmul(E1) - self.diff(2).lmul(E2)

    def hyper_derivative(self) -> "QPoly":
        return self.dbar_adjoint().scaled(0.5)

    def dbar_c(self) -> "QPoly":
        """The operator (1/2)(d/dx1 + e3 d/dx2) from the left."""
        return (self.diff(1) + self.diff(2).lmul(E3)).scaled(0.5)

    def value_at_origin(self) -> Quaternion:
        return self.terms.get((0, 0, 0), Quaternion())

    def evaluate(self, x) -> Quaternion:
        out = Quaternion()
        for (a, b, c), coeff in self.terms.items():
            out = out + coeff * (x.x0**a * x.x1**b * x.x2**c)
        return out

    def max_coeff_norm(self) -> float:
        return max((float(c.norm()) for c in self.terms.values()), default=0.0)

    def __repr__(self) -> str:
        return f"QPoly({self.terms!r})"


def x_poly() -> QPoly:
    """The reduced quaternion x = x0 + x1 e1 + x2 e2 as a polynomial."""
    return QPoly({(1, 0, 0): Quaternion(1.0), (0, 1, 0): E1, (0, 0, 1): E2})


def xbar_poly() -> QPoly:
    return QPoly({(1, 0, 0): Quaternion(1.0), (0, 1, 0): -E1, (0, 0, 1): -E2})


def zeta_poly() -> QPoly:
    """The monogenic constant zeta = x1 - x2 e3 as a polynomial."""
    return QPoly({(0, 1, 0): Quaternion(1.0), (0, 0, 1): -E3})
