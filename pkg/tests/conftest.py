import numpy as np
import pytest

from elvis import Ball, Ellipse, Polygon, make_problem, validate

# Documented test squares for the polyhedral (non-smooth) experiments:
#   SQUARE0 is the axis-aligned unit square.
#   SQUARE1 is the unit square rotated 45 degrees and shifted up by 0.25, so
#   its vertices sit at (+-1, 0.25) and (0, 0.25 +- 1) with the origin inside.
# With x0 = (0, -1) these produce three solution regions along a horizontal
# sweep of x1: crossings pinned at y = -1, at y = x1_x, and at y = +1.
SQUARE0_VERTICES = [(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)]
SQUARE1_VERTICES = [(1.0, 0.25), (0.0, 1.25), (-1.0, 0.25), (0.0, -0.75)]


@pytest.fixture
def square0():
    return validate(Polygon(SQUARE0_VERTICES))


@pytest.fixture
def square1():
    return validate(Polygon(SQUARE1_VERTICES))


@pytest.fixture
def elliptic_problem():
    # x0/x1 on the diagonal, strongly anisotropic ellipses; reference crossing
    # abscissa is -0.401 to three decimals.
    return make_problem((-1.0, -1.0), (1.0, 1.0), Ellipse(1.0, 0.5), Ellipse(2.0, 1.0))


@pytest.fixture
def symmetric_ball_problem():
    return make_problem((-1.0, -1.0), (1.0, 1.0), Ball(1.0), Ball(1.0))


@pytest.fixture
def square_problem(square0, square1):
    return make_problem((0.0, -1.0), (0.5, 1.0), square0, square1)


def random_ball(rng):
    return Ball(float(rng.uniform(0.5, 3.0)))


def random_ellipse(rng):
    return Ellipse(
        float(rng.uniform(0.5, 3.0)),
        float(rng.uniform(0.5, 3.0)),
        float(rng.uniform(0.0, np.pi)),
    )


def random_polygon(rng):
    """Random strictly convex polygon with the origin inside (star construction)."""
    n = int(rng.integers(3, 9))
    angles = np.sort(rng.uniform(0.0, 2.0 * np.pi, n))
    radii = rng.uniform(0.5, 3.0, n)
    pts = np.column_stack((radii * np.cos(angles), radii * np.sin(angles)))
    pts -= 0.5 * pts.mean(axis=0)
    return Polygon(pts)


def random_validated_set(rng):
    """Keep drawing until validation succeeds (degenerate polygons are rare)."""
    makers = [random_ball, random_ellipse, random_polygon]
    while True:
        try:
            return validate(makers[int(rng.integers(3))](rng))
        except Exception:
            continue


def random_problem(rng, families=None):
    from elvis import ValidationError

    makers = families or [random_ball, random_ellipse, random_polygon]
    while True:
        x0 = (float(rng.uniform(-3, 3)), float(rng.uniform(-3, -0.1)))
        x1 = (float(rng.uniform(-3, 3)), float(rng.uniform(0.1, 3)))
        f0 = makers[int(rng.integers(len(makers)))](rng)
        f1 = makers[int(rng.integers(len(makers)))](rng)
        try:
            return make_problem(x0, x1, f0, f1)
        except ValidationError:
            continue


def boundary_points(vset, n, rng):
    """Random points on the boundary of a validated set (closed-form construction)."""
    if isinstance(vset, Ball):
        t = rng.uniform(0.0, 2.0 * np.pi, n)
        return vset.r * np.column_stack((np.cos(t), np.sin(t)))
    if isinstance(vset, Ellipse):
        t = rng.uniform(0.0, 2.0 * np.pi, n)
        c, s = np.cos(vset.rot), np.sin(vset.rot)
        rot = np.array([[c, -s], [s, c]])
        pts = np.column_stack((vset.a * np.cos(t), vset.b * np.sin(t)))
        return pts @ rot.T
    verts = vset.vertices
    idx = rng.integers(0, len(verts), n)
    t = rng.uniform(0.0, 1.0, n)[:, None]
    nxt = np.roll(verts, -1, axis=0)
    return (1.0 - t) * verts[idx] + t * nxt[idx]
