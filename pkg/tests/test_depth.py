import random
from fractions import Fraction

from galedeg import generators as gen
from galedeg.config import PointConfiguration
from galedeg.depth import (
    check_core_tverberg,
    halfspace_depth,
    tverberg_order,
    verify_tverberg_partition,
)

X = (Fraction(100, 31), Fraction(60, 31))
CROSS = [(1, 0), (-1, 0), (0, 1), (0, -1)]


def test_pentagon_diagonal_crossing(pent):
    D = halfspace_depth(pent, X)
    assert D.depth == 2 and D.verify(pent)
    T = tverberg_order(pent, X)
    assert T.order == 2 and T.partition == ((0, 2), (1, 3))
    assert T.verify(pent)


def test_triangle_centroid(triangle):
    c = (Fraction(1, 3), Fraction(1, 3))
    assert halfspace_depth(triangle, c).depth == 1
    assert tverberg_order(triangle, c).order == 1


def test_outside_point(pent):
    D = halfspace_depth(pent, (10, 10))
    assert D.depth == 0 and D.verify(pent)
    assert tverberg_order(pent, (10, 10)).order == 0


def test_cross_at_origin_is_tight():
    S = PointConfiguration.from_points(CROSS)
    assert halfspace_depth(S, (0, 0)).depth == 2
    assert tverberg_order(S, (0, 0)).partition == ((0, 1), (2, 3))
    chk = check_core_tverberg(S, (0, 0))
    assert (chk.depth, chk.order, chk.bound, chk.satisfied) == (2, 2, 2, True)


def test_pentagon_bound_is_trivial(pent):
    chk = check_core_tverberg(pent, X)
    assert chk.bound == 0 and chk.satisfied


def test_raw_point_lists_accepted():
    assert halfspace_depth(CROSS, (0, 0)).depth == 2


def test_partition_checker_accepts_closure(triangle):
    # the query point is a vertex of the part: closed hull membership
    assert verify_tverberg_partition(triangle, (0, 0), [(0,)])
    assert verify_tverberg_partition(triangle, (Fraction(1, 2), 0), [(0, 1)])
    assert not verify_tverberg_partition(triangle, (1, 1), [(0, 1, 2)])
    assert not verify_tverberg_partition(triangle, (0, 0), [(0, 1), (1, 2)])


def test_order_at_most_depth_and_bound_holds():
    rng = random.Random(31)
    for _ in range(80):
        d = rng.randint(1, 3)
        S = gen.random_points(rng.randint(d + 1, 9), d, rng, distinct=False)
        x = tuple(Fraction(rng.randint(-6, 6), 2) for _ in range(d))
        chk = check_core_tverberg(S, x)
        assert chk.order <= chk.depth and chk.satisfied
        assert halfspace_depth(S, x).verify(S)
        assert tverberg_order(S, x).verify(S)


def test_depth_affine_invariance():
    rng = random.Random(13)
    for _ in range(20):
        S = gen.random_points(rng.randint(4, 8), 2, rng)
        x = (Fraction(rng.randint(-4, 4), 3), Fraction(rng.randint(-4, 4), 3))
        M = gen.random_unimodular(2, rng)
        img = lambda p: tuple(sum(M[i][k] * p[k] for k in range(2)) for i in range(2))  # noqa: E731
        S2 = PointConfiguration.from_points([img(p) for p in S.points])
        assert halfspace_depth(S, x).depth == halfspace_depth(S2, img(x)).depth
        assert tverberg_order(S, x).order == tverberg_order(S2, img(x)).order
