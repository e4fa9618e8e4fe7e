from fractions import Fraction

import pytest

from galedeg.exactnum import (
    Position,
    QMatrix,
    as_rational,
    convex_combination,
    integer_scale,
    kernel_basis,
    minimize,
    origin_position,
    positive_dependence,
    primitive,
    rank,
    rref,
    strict_separation,
)


def test_as_rational_rejects_floats():
    assert as_rational(3) == 3
    assert as_rational("2/6") == Fraction(1, 3)
    with pytest.raises((TypeError, ValueError)):
        as_rational(0.5)


def test_qmatrix_shape_checks():
    M = QMatrix.from_rows([[1, 2], [3, 4]])
    assert M.row(1) == (3, 4)
    assert M.column(0) == (1, 3)
    assert M.transpose().as_rows() == [(1, 3), (2, 4)]
    assert QMatrix.from_columns([(1, 3), (2, 4)]) == M
    with pytest.raises(ValueError):
        QMatrix(2, 2, (1, 2, 3))
    with pytest.raises(ValueError):
        QMatrix.from_rows([[1, 2], [3]])


@pytest.mark.parametrize("rows, expected", [
    ([[1, 0], [0, 1]], 2),
    ([[0, 0, 0]] * 3, 0),
    ([[1, 0], [0, 1], [1, 1]], 2),
    ([["1/2", "1/3"], [3, 2]], 1),
])
def test_rank(rows, expected):
    assert rank(QMatrix.from_rows(rows)) == expected


def test_rref_is_reduced():
    R, piv = rref(QMatrix.from_rows([[2, 4, 6], [1, 1, 1]]))
    assert piv == [0, 1]
    assert R[0] == [1, 0, -1] and R[1] == [0, 1, 2]


def test_kernel_examples():
    assert kernel_basis(QMatrix.from_rows([[1, 0], [0, 1]])) == []
    assert kernel_basis(QMatrix.from_rows([[1, 1]])) == [(1, -1)]
    sq = QMatrix.from_columns([(0, 0, 1), (1, 0, 1), (1, 1, 1), (0, 1, 1)])
    assert kernel_basis(sq) == [(1, -1, 1, -1)]


def test_kernel_vectors_primitive_and_annihilated():
    M = QMatrix.from_rows([[1, 2, 3, 4], ["1/2", 0, 5, -1]])
    ker = kernel_basis(M)
    assert len(ker) == 2
    for v in ker:
        assert primitive(v) == v
        for r in M.as_rows():
            assert sum(a * b for a, b in zip(r, v)) == 0


def test_integer_scale_and_primitive():
    assert integer_scale([Fraction(1, 2), Fraction(-1, 3)]) == (3, -2)
    assert primitive([0, -2, 4]) == (0, 1, -2)


@pytest.mark.parametrize("W, pos", [
    ([(1, 0), (-1, 0)], Position.IN_RELINT),
    ([(1, 0), (0, 1)], Position.OUTSIDE),
    ([(1, 0), (-1, 0), (0, 1)], Position.IN_HULL_NOT_RELINT),
    ([(0, 0)], Position.IN_RELINT),
])
def test_origin_position(W, pos):
    cert = origin_position(W)
    assert cert.position is pos
    assert cert.verify(W)


def test_origin_position_certificates_are_exact():
    assert origin_position([(1, 0), (-1, 0)]).dependence == (1, 1)
    c = origin_position([(1, 0), (0, 1)]).functional
    assert c == (1, 1)


def test_strict_separation():
    c = strict_separation([(1, 0), (1, 1)])
    assert all(c[0] * x + c[1] * y > 0 for x, y in [(1, 0), (1, 1)])
    assert strict_separation([(1, 0), (-1, 0)]) is None
    pent_dual = [(1, -2), (-1, 1), (1, 0), (-1, 0), (0, 1)]
    assert strict_separation(pent_dual) is None
    assert strict_separation([], dim=3) == (1, 0, 0)


def test_minimize_small_lp():
    # min x + y  s.t. x + 2y >= 4, 3x + y >= 6, x, y >= 0  -> (8/5, 6/5)
    x = minimize([1, 1], A_ge=[[1, 2], [3, 1]], b_ge=[4, 6], free=False)
    assert x == [Fraction(8, 5), Fraction(6, 5)]
    assert minimize([1], A_eq=[[1]], b_eq=[-1], free=False) is None


def test_positive_dependence_and_convex_combination():
    assert positive_dependence([(1, 0), (-1, 1), (0, -1)]) == (1, 1, 1)
    assert positive_dependence([(1, 0), (-1, 0), (0, 1)]) is None
    w = convex_combination((1, 1), [(0, 0), (2, 0), (0, 2), (2, 2)])
    assert w is not None and sum(w) == 1 and all(x >= 0 for x in w)
    assert convex_combination((3, 0), [(0, 0), (2, 0)]) is None
