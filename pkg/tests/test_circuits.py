import random

import pytest

from galedeg import generators as gen
from galedeg.circuits import (
    SignedSet,
    WeakCayleyDecomposition,
    circuits,
    check_small_circuits_deg1,
    is_lawrence,
    is_positive_circuit,
    max_combinatorial_cayley,
    max_weak_cayley,
    positive_circuits,
    verify_weak_cayley_primal,
)
from galedeg.config import VectorConfiguration, gale_dual
from galedeg.degree import dual_degree


def vc(*vecs):
    return VectorConfiguration(len(vecs[0]), tuple(vecs))


def test_signed_set_orientation():
    s = SignedSet.oriented([3], [1, 2])
    assert s.pos == {1, 2} and s.neg == {3}
    with pytest.raises(ValueError):
        SignedSet({2}, {1})


def test_circuit_examples(pent):
    assert circuits(vc((1, 0), (-1, 0), (0, 1))) == [SignedSet({0, 1}, set())]
    assert circuits(vc((1, 0), (0, 1), (1, 1))) == [SignedSet({0, 1}, {2})]
    cs = circuits(gale_dual(pent))
    assert len(cs) == 10
    assert sum(c.is_positive for c in cs) == 5


def test_positive_circuits(cross, pent):
    assert positive_circuits(cross) == [(0, 1), (2, 3)]
    assert positive_circuits(vc((1, 0), (0, 1))) == []
    assert positive_circuits(gale_dual(pent)) == [
        (0, 1, 2), (0, 1, 4), (0, 3, 4), (1, 2, 3), (2, 3, 4)]


def test_circuits_are_minimal_dependences():
    rng = random.Random(1)
    for _ in range(10):
        V = gen.random_vectors(rng.randint(3, 7), rng.randint(1, 3), rng)
        for c in circuits(V):
            assert c == SignedSet.oriented(c.pos, c.neg)
            assert len(c) <= V.rank + 1
            if c.is_positive:
                assert is_positive_circuit(V, c.support)


def test_max_weak_cayley_examples(cross, pent, a7):
    D = max_weak_cayley(cross)
    assert D.length == 2 and D.factors == ((0, 1), (2, 3))
    assert max_weak_cayley(gale_dual(pent)).length == 1
    D = max_weak_cayley(gale_dual(a7))
    assert D.length == 2 and D.verify(gale_dual(a7))


def test_max_combinatorial_cayley(cross):
    assert max_combinatorial_cayley(cross).length == 2
    assert max_combinatorial_cayley(vc((1, 0), (0, 1))) is None


def test_a7_combinatorial_split_is_real(a7):
    # {0, e1+e3, e2+e3} and the rest: both are faces of conv(A7), cut out by parallel planes
    C = max_combinatorial_cayley(gale_dual(a7))
    assert C.length == 2 and C.verify(gale_dual(a7))
    top = {0, 3, 5}
    assert all(p[2] == p[0] + p[1] for l, p in zip(a7.labels, a7.points) if l in top)
    assert all(p[0] + p[1] - p[2] == 2 for l, p in zip(a7.labels, a7.points) if l not in top)


def test_weak_cayley_bounded_by_codegree():
    rng = random.Random(21)
    for _ in range(40):
        V = gen.random_vectors(rng.randint(3, 9), rng.randint(1, 3), rng, totally_cyclic=True)
        D = max_weak_cayley(V)
        r = dual_degree(V)
        assert D.verify(V)
        assert D.length <= r.codegree
        assert D.length >= V.d - 3 * r.degree + 1


def test_verify_weak_cayley_primal(a7, pent, triangle):
    D = WeakCayleyDecomposition(((1, 3, 4), (2, 5, 6)), (0,))
    chk = verify_weak_cayley_primal(a7, D)
    assert chk.ok and chk.gale_ok
    assert chk.witnesses == (((1, 0, 0), 0), ((0, 1, 0), 0))
    bad = WeakCayleyDecomposition(((0, 1),), (2, 3, 4))
    assert not verify_weak_cayley_primal(pent, bad).ok
    one = WeakCayleyDecomposition(((0,),), (1, 2))
    assert verify_weak_cayley_primal(triangle, one).ok


def test_is_lawrence(cross, pent):
    assert is_lawrence(cross) == [(0, 1), (2, 3)]
    assert is_lawrence(gale_dual(pent)) is None
    assert is_lawrence(vc((1,), (-2,))) == [(0, 1)]
    assert is_lawrence(vc((1,), (2,))) is None


def test_small_circuits(cross, pent):
    assert check_small_circuits_deg1(gale_dual(pent)) == (True, None)
    assert check_small_circuits_deg1(gale_dual(gen.prism(3)))[0]
    with pytest.raises(ValueError):
        check_small_circuits_deg1(cross)
