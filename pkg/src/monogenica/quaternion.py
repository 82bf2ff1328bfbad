"""Quaternion and reduced-quaternion value types.

Components may be floats or numpy arrays of a common broadcastable shape,
so a single ``Quaternion`` can hold a whole batch of values; every operation
is elementwise over the batch.  All values are immutable in spirit: methods
return new objects and never mutate their operands.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "Quaternion",
    "Point3",
    "ONE",
    "E1",
    "E2",
    "E3",
    "zeta",
    "antimonogenic_involution",
]


def _c(value):
    # normalize scalar components to float, leave arrays untouched
    if isinstance(value, np.ndarray):
        return value
    return float(value)


class Quaternion:
    """Element of the real quaternions a0 + a1*e1 + a2*e2 + a3*e3.

    The basis obeys e1*e2 = e3 and ei*ej + ej*ei = -2*delta_ij for
    i, j in {1, 2, 3}.
    """

    __slots__ = ("a0", "a1", "a2", "a3")

    def __init__(self, a0=0.0, a1=0.0, a2=0.0, a3=0.0):
        self.a0 = _c(a0)
        self.a1 = _c(a1)
        self.a2 = _c(a2)
        self.a3 = _c(a3)

    # -- structure -----------------------------------------------------

    def components(self):
        return (self.a0, self.a1, self.a2, self.a3)

    def as_array(self) -> np.ndarray:
        """Stack the four components along a trailing axis."""
        a0, a1, a2, a3 = np.broadcast_arrays(self.a0, self.a1, self.a2, self.a3)
        return np.stack([a0, a1, a2, a3], axis=-1)

    def sc(self):
        """Scalar part."""
        return self.a0

    def vec(self) -> "Quaternion":
        """Vector part a1*e1 + a2*e2 + a3*e3."""
        return Quaternion(0.0, self.a1, self.a2, self.a3)

    def conj(self) -> "Quaternion":
        return Quaternion(self.a0, -self.a1, -self.a2, -self.a3)

    def hat(self) -> "Quaternion":
        """Involution negating the e1 and e2 components only.

        Sends a monogenic function value to the corresponding
        anti-monogenic one.
        """
        return Quaternion(self.a0, -self.a1, -self.a2, self.a3)

    def norm_sq(self):
        return self.a0 * self.a0 + self.a1 * self.a1 + self.a2 * self.a2 + self.a3 * self.a3

    def norm(self):
        return np.sqrt(self.norm_sq())

    def inverse(self) -> "Quaternion":
        n2 = self.norm_sq()
        if np.any(n2 == 0.0):
            raise ZeroDivisionError("inverse of zero quaternion")
        return Quaternion(self.a0 / n2, -self.a1 / n2, -self.a2 / n2, -self.a3 / n2)

    # -- arithmetic ----------------------------------------------------

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.a0, -self.a1, -self.a2, -self.a3)

    def __add__(self, other) -> "Quaternion":
        if isinstance(other, Quaternion):
            return Quaternion(
                self.a0 + other.a0,
                self.a1 + other.a1,
                self.a2 + other.a2,
                self.a3 + other.a3,
            )
        return Quaternion(self.a0 + other, self.a1, self.a2, self.a3)

    __radd__ = __add__

    def __sub__(self, other) -> "Quaternion":
        return self.__add__(-other if isinstance(other, Quaternion) else -1.0 * other)

    def __rsub__(self, other) -> "Quaternion":
        return (-self).__add__(other)

    def __mul__(self, other) -> "Quaternion":
        if isinstance(other, Quaternion):
            a0, a1, a2, a3 = self.components()
            b0, b1, b2, b3 = other.components()
            return Quaternion(
                a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
                a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
                a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
                a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
            )
        return Quaternion(self.a0 * other, self.a1 * other, self.a2 * other, self.a3 * other)

    def __rmul__(self, other) -> "Quaternion":
        # other is real (or a real field); reals are central, order is moot
        return Quaternion(self.a0 * other, self.a1 * other, self.a2 * other, self.a3 * other)

    def __truediv__(self, other) -> "Quaternion":
        if isinstance(other, Quaternion):
            raise TypeError("quaternion division is ambiguous; multiply by inverse() explicitly")
        return Quaternion(self.a0 / other, self.a1 / other, self.a2 / other, self.a3 / other)

    def __pow__(self, n: int) -> "Quaternion":
        if not isinstance(n, (int, np.integer)) or n < 0:
            raise ValueError("only nonnegative integer quaternion powers are supported")
        result = Quaternion(1.0)
        base = self
        n = int(n)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self) -> str:
        return f"Quaternion({self.a0!r}, {self.a1!r}, {self.a2!r}, {self.a3!r})"


ONE = Quaternion(1.0)
E1 = Quaternion(0.0, 1.0)
E2 = Quaternion(0.0, 0.0, 1.0)
E3 = Quaternion(0.0, 0.0, 0.0, 1.0)


def antimonogenic_involution(a: Quaternion) -> Quaternion:
    """Negate the e1 and e2 components of ``a``; involutive."""
    return a.hat()


class Point3:
    """Point of R^3 identified with the reduced quaternion x0 + x1*e1 + x2*e2.

    Components may be floats or numpy arrays (a batch of points).
    """

    __slots__ = ("x0", "x1", "x2")

    def __init__(self, x0=0.0, x1=0.0, x2=0.0):
        self.x0 = _c(x0)
        self.x1 = _c(x1)
        self.x2 = _c(x2)

    @classmethod
    def from_spherical(cls, r, theta, phi) -> "Point3":
        st = np.sin(theta)
        return cls(r * np.cos(theta), r * st * np.cos(phi), r * st * np.sin(phi))

    @classmethod
    def from_array(cls, xyz) -> "Point3":
        xyz = np.asarray(xyz, dtype=float)
        return cls(xyz[..., 0], xyz[..., 1], xyz[..., 2])

    def components(self):
        return (self.x0, self.x1, self.x2)

    def as_array(self) -> np.ndarray:
        x0, x1, x2 = np.broadcast_arrays(self.x0, self.x1, self.x2)
        return np.stack([x0, x1, x2], axis=-1)

    def to_quaternion(self) -> Quaternion:
        return Quaternion(self.x0, self.x1, self.x2, 0.0)

    def conj(self) -> "Point3":
        return Point3(self.x0, -self.x1, -self.x2)

    def norm_sq(self):
        return self.x0 * self.x0 + self.x1 * self.x1 + self.x2 * self.x2

    def norm(self):
        return np.sqrt(self.norm_sq())

    def spherical(self):
        """Spherical coordinates (r, theta, phi) with x0 = r*cos(theta).

        At the origin theta and phi are set to (pi/2, 0); callers relying
        on angles there must handle the degeneracy themselves.
        """
        r = self.norm()
        safe = np.where(r == 0.0, 1.0, r)
        ct = np.clip(self.x0 / safe, -1.0, 1.0)
        theta = np.where(r == 0.0, 0.5 * np.pi, np.arccos(ct))
        phi = np.mod(np.arctan2(self.x2, self.x1), 2.0 * np.pi)
        return r, theta, phi

    def __add__(self, other: "Point3") -> "Point3":
        return Point3(self.x0 + other.x0, self.x1 + other.x1, self.x2 + other.x2)

    def __sub__(self, other: "Point3") -> "Point3":
        return Point3(self.x0 - other.x0, self.x1 - other.x1, self.x2 - other.x2)

    def __neg__(self) -> "Point3":
        return Point3(-self.x0, -self.x1, -self.x2)

    def __mul__(self, s) -> "Point3":
        return Point3(self.x0 * s, self.x1 * s, self.x2 * s)

    __rmul__ = __mul__

    def shifted(self, d0=0.0, d1=0.0, d2=0.0) -> "Point3":
        return Point3(self.x0 + d0, self.x1 + d1, self.x2 + d2)

    def __repr__(self) -> str:
        return f"Point3({self.x0!r}, {self.x1!r}, {self.x2!r})"


def zeta(x: Point3) -> Quaternion:
    """The monogenic-constant generator x1 - x2*e3 at the point ``x``."""
    return Quaternion(x.x1, 0.0, 0.0, -x.x2)
