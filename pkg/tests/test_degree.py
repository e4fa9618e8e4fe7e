import random

import pytest

from galedeg import generators as gen
from galedeg.config import (
    ConfigurationError,
    PointConfiguration,
    VectorConfiguration,
    delete,
    gale_dual,
    strip_pyramids,
)
from galedeg.degree import (
    degree_oracle,
    degree_primal,
    dual_codegree,
    dual_degree,
    facets,
    is_interior_face,
    section_quotient_degrees,
)
from galedeg.exactnum import dot


def test_facets(triangle, square, pent):
    assert [len(f.members) for f in facets(triangle)] == [2, 2, 2]
    assert len(facets(square)) == 4
    assert [f.members for f in facets(pent)] == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]


def test_facet_normals_support(pent):
    for f in facets(pent):
        for l, p in zip(pent.labels, pent.points):
            v = f.value(p)
            assert v >= 0
            assert (v == 0) == (l in f.members)


def test_interior_faces(pent):
    assert is_interior_face(pent, {0, 2})
    assert not is_interior_face(pent, {0, 1})
    tc = PointConfiguration.from_points([(0, 0), (3, 0), (0, 3), (1, 1)])
    assert is_interior_face(tc, {3})
    with pytest.raises(ValueError):
        is_interior_face(pent, set())


def test_degree_examples(triangle, pent, a7):
    assert degree_primal(triangle).degree == 0
    assert degree_primal(gen.edge_simplex(4, 0)).degree == 0
    r = degree_primal(pent)
    assert (r.degree, r.codegree, r.witness_interior_face) == (1, 2, (0, 2))
    r = degree_primal(a7)
    assert (r.degree, r.codegree) == (2, 2)
    for A in (triangle, pent, a7):
        assert degree_oracle(A) == degree_primal(A).degree


def test_dual_degree_examples(cross, pent):
    assert dual_degree(cross).degree == 0
    assert dual_degree(gale_dual(pent)).degree == 1
    r = dual_degree(VectorConfiguration(2, ((1, 0), (0, 1), (-1, -1))))
    assert (r.degree, r.codegree) == (0, 1)


def test_dual_witness_hyperplane_counts(pent, a7):
    for A in (pent, a7, gen.pentagon_join(2)):
        V = gale_dual(A)
        r = dual_degree(V)
        pos = [v for v in V.vectors if dot(r.witness_hyperplane.normal, v) > 0]
        assert len(pos) == V.rank + r.degree
        assert r.degree + r.codegree == V.d + 1


def test_primal_dual_and_oracle_random():
    rng = random.Random(17)
    for _ in range(60):
        d = rng.randint(1, 3)
        A = gen.random_points(rng.randint(d + 1, 8), d, rng)
        p = degree_primal(A)
        g = dual_degree(gale_dual(A))
        assert (p.degree, p.codegree) == (g.degree, g.codegree)
        assert p.degree == degree_oracle(A)
        assert not any(set(p.witness_interior_face) <= set(f.members) for f in facets(A))


def test_repeated_points_do_not_change_degree():
    rng = random.Random(8)
    for _ in range(20):
        A = gen.random_points(rng.randint(4, 8), 2, rng, lo=-1, hi=1, distinct=False)
        assert degree_primal(A).degree == degree_oracle(A)


def test_point_deletion_monotone():
    rng = random.Random(6)
    for _ in range(20):
        A = gen.random_points(rng.randint(5, 8), 2, rng)
        delta = degree_primal(A).degree
        for l in A.labels:
            try:
                B = A.restrict(set(A.labels) - {l})
            except ConfigurationError:
                continue
            assert degree_primal(B).degree <= delta


def test_pyramid_bound_random():
    rng = random.Random(12)
    for _ in range(40):
        d = rng.randint(1, 4)
        A = gen.random_points(rng.randint(d + 1, d + 4), d, rng)
        delta = degree_primal(A).degree
        if 2 * d >= 2 * delta + A.n - 1:
            assert strip_pyramids(A)[1]


def test_dual_codegree_matches_report(cross):
    assert dual_codegree(cross) == dual_degree(cross).codegree == 2


def test_section_quotient_examples(cross):
    assert section_quotient_degrees(cross, [0, 1]) == (0, 0, 0)
    J = gale_dual(gen.pentagon_join(2))
    assert section_quotient_degrees(J, [0, 1, 2, 3, 4]) == (1, 1, 2)
    V = gale_dual(gen.pentagon())
    assert section_quotient_degrees(V, V.labels) == (1, 0, 1)


def test_section_quotient_precondition(cross):
    V = VectorConfiguration(2, ((1, 0), (2, 0), (0, 1), (-1, -1)))
    with pytest.raises(ConfigurationError):
        section_quotient_degrees(V, [0])


def test_deletion_subconfiguration(cross):
    assert dual_degree(delete(cross, 3)).degree <= dual_degree(cross).degree
