import math

import numpy as np
import pytest

from conftest import assert_q_close, ball_points, random_quaternion
from monogenica import basis, calculus
from monogenica.quaternion import (
    E1,
    E2,
    E3,
    ONE,
    Point3,
    Quaternion,
    antimonogenic_involution,
    zeta,
)


def test_multiplication_table():
    assert_q_close(E1 * E2, E3, 1e-15)
    assert_q_close(E2 * E3, E1, 1e-15)
    assert_q_close(E3 * E1, E2, 1e-15)
    for e in (E1, E2, E3):
        assert_q_close(e * e, -ONE, 1e-15)
    # anticommutation
    for a in (E1, E2, E3):
        for b in (E1, E2, E3):
            if a is not b:
                assert_q_close(a * b, -(b * a), 1e-15)


def test_unit_element(rng):
    for _ in range(10):
        a = random_quaternion(rng)
        assert_q_close(ONE * a, a, 1e-15)
        assert_q_close(a * ONE, a, 1e-15)


def test_expand_product_by_table():
    # (1 + e1)(1 + e2) = 1 + e1 + e2 + e1 e2 = 1 + e1 + e2 + e3
    got = (ONE + E1) * (ONE + E2)
    assert_q_close(got, Quaternion(1, 1, 1, 1), 1e-15)


def test_conj_norm_inverse():
    assert_q_close((ONE + E1).conj(), Quaternion(1, -1, 0, 0), 1e-15)
    assert Quaternion(1, 1, 1, 1).norm() == pytest.approx(2.0, abs=1e-15)
    assert_q_close((E1 * 2.0).inverse(), E1 * (-0.5), 1e-16)
    with pytest.raises(ZeroDivisionError):
        Quaternion().inverse()


def test_norm_via_conjugate(rng):
    for _ in range(20):
        a = random_quaternion(rng)
        prod = a * a.conj()
        assert prod.a0 == pytest.approx(a.norm_sq(), rel=1e-14)
        assert prod.vec().norm() < 1e-14 * a.norm_sq()
        assert_q_close(a * a.inverse(), ONE, 1e-14)
        assert_q_close(a.inverse() * a, ONE, 1e-14)


def test_conjugation_antihomomorphism(rng):
    for _ in range(20):
        a, b = random_quaternion(rng), random_quaternion(rng)
        assert_q_close((a * b).conj(), b.conj() * a.conj(), 1e-13)
        assert abs((a * b).norm() - a.norm() * b.norm()) < 1e-14 * a.norm() * b.norm()


def test_point3_promotion_commutes_with_conjugation(rng):
    p = Point3(*rng.standard_normal(3))
    left = p.conj().to_quaternion()
    right = p.to_quaternion().conj()
    assert_q_close(left, right, 1e-16)
    assert isinstance(p.conj(), Point3)
    assert p.to_quaternion().a3 == 0.0


def test_spherical_coordinates_roundtrip(rng):
    p = ball_points(rng, 50)
    r, theta, phi = p.spherical()
    back = Point3.from_spherical(r, theta, phi)
    assert float(np.max((back - p).norm())) < 1e-13


def test_involution_values():
    assert_q_close(
        antimonogenic_involution(Quaternion(1, 1, 1, 1)), Quaternion(1, -1, -1, 1), 1e-16
    )


def test_involution_is_involutive(rng):
    for _ in range(10):
        a = random_quaternion(rng)
        assert_q_close(a.hat().hat(), a, 1e-16)


def test_involution_gives_antimonogenic(rng):
    # the image of a monogenic function under the involution solves the
    # adjoint equation
    pts = ball_points(rng, 20)
    for n, l in [(1, 0), (3, 1)]:
        residual = calculus.fd_dbar_adjoint(
            lambda p: basis.appell_inner_closed(n, l, p).hat(), pts
        )
        assert float(np.max(residual.norm())) < 1e-6


def test_zeta_is_monogenic_by_hand():
    # dbar zeta = e1*1 + e2*(-e3) = e1 - e1 = 0
    term = E1 * ONE + E2 * (-E3)
    assert float(term.norm()) == 0.0


def test_quaternion_power():
    q = Quaternion(0.3, -0.2, 0.1, 0.7)
    by_mul = ONE
    for k in range(6):
        assert_q_close(q**k, by_mul, 1e-13)
        by_mul = by_mul * q
