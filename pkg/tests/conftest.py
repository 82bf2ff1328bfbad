import numpy as np
import pytest

from monogenica.quaternion import Point3, Quaternion


def q_max_dist(a: Quaternion, b: Quaternion) -> float:
    """Largest pointwise quaternion distance over a batch."""
    return float(np.max((a - b).norm()))


def assert_q_close(a: Quaternion, b: Quaternion, tol: float = 1e-12):
    dist = q_max_dist(a, b)
    assert dist < tol, f"quaternion mismatch: {dist:.3e} >= {tol:.1e}"


def random_quaternion(rng) -> Quaternion:
    return Quaternion(*rng.standard_normal(4))


def ball_points(rng, count: int, r_max: float = 0.9) -> Point3:
    r = r_max * rng.uniform(0.02, 1.0, count) ** (1.0 / 3.0)
    t = rng.uniform(-0.99, 0.99, count)
    phi = rng.uniform(0.0, 2 * np.pi, count)
    st = np.sqrt(1 - t * t)
    return Point3(r * t, r * st * np.cos(phi), r * st * np.sin(phi))


def shell_points(rng, count: int, r_in: float = 1.1, r_out: float = 3.0) -> Point3:
    r = rng.uniform(r_in, r_out, count)
    t = rng.uniform(-0.99, 0.99, count)
    phi = rng.uniform(0.0, 2 * np.pi, count)
    st = np.sqrt(1 - t * t)
    return Point3(r * t, r * st * np.cos(phi), r * st * np.sin(phi))


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
