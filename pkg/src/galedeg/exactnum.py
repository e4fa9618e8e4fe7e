"""Exact rational linear algebra and small feasibility problems.

Everything here works over :class:`fractions.Fraction` (or plain ``int``);
floats are rejected at the door.  Hot paths scale rows to integers and use
fraction-free elimination.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "QMatrix",
    "Position",
    "OriginCertificate",
    "as_rational",
    "dot",
    "primitive",
    "integer_scale",
    "rref",
    "rank",
    "kernel_basis",
    "origin_position",
    "strict_separation",
    "find_point",
    "minimize",
    "positive_dependence",
    "convex_combination",
]


def as_rational(x) -> Fraction:
    """Convert ``int``, ``Fraction`` or a string like ``"-3/4"`` to a Fraction."""
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floating point input is not accepted; use 'a/b' strings")
    # sympy/gmpy rationals and friends
    try:
        return Fraction(int(x.numerator), int(x.denominator))
    except AttributeError:
        raise TypeError(f"cannot interpret {x!r} as a rational") from None


@dataclass(frozen=True)
class QMatrix:
    """Dense row-major rational matrix."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix shape")
        entries = tuple(as_rational(e) for e in self.entries)
        if len(entries) != self.rows * self.cols:
            raise ValueError(
                f"{len(entries)} entries do not fill a {self.rows}x{self.cols} matrix")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> QMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cannot infer column count of an empty row list")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(e for r in rows for e in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> QMatrix:
        columns = [list(c) for c in columns]
        if rows is None:
            if not columns:
                raise ValueError("cannot infer row count of an empty column list")
            rows = len(columns[0])
        return cls.from_rows([[c[i] for c in columns] for i in range(rows)], len(columns))

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def as_rows(self) -> list[tuple]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> QMatrix:
        return QMatrix.from_rows([self.column(j) for j in range(self.cols)], self.rows)


def _shape(M) -> tuple[list[list[Fraction]], int]:
    if isinstance(M, QMatrix):
        return [list(r) for r in M.as_rows()], M.cols
    rows = [[as_rational(e) for e in r] for r in M]
    if not rows:
        raise ValueError("pass a QMatrix to describe a matrix without rows")
    cols = len(rows[0])
    if any(len(r) != cols for r in rows):
        raise ValueError("ragged rows")
    return rows, cols


def dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v)), 0)


def integer_scale(vec: Iterable) -> tuple[int, ...]:
    """Positive multiple of ``vec`` with coprime integer entries (signs kept)."""
    vec = [as_rational(x) for x in vec]
    den = reduce(lcm, (x.denominator for x in vec), 1)
    ints = [int(x * den) for x in vec]
    g = reduce(gcd, ints, 0)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def primitive(vec: Iterable) -> tuple[int, ...]:
    """Coprime integer multiple of ``vec`` whose first nonzero entry is positive."""
    ints = integer_scale(vec)
    for x in ints:
        if x:
            if x < 0:
                ints = tuple(-y for y in ints)
            break
    return ints


def _int_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    return [list(integer_scale(r)) for r in rows]


def _int_echelon(rows: list[list[int]], cols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free reduced echelon form.

    Returns integer rows (pivot entries positive, pivot columns cleared in
    every other row, each row with content 1) and the pivot columns.
    """
    rows = [r[:] for r in rows if any(r)]
    pivots: list[int] = []
    top = 0
    for col in range(cols):
        if top == len(rows):
            break
        sel = next((i for i in range(top, len(rows)) if rows[i][col]), None)
        if sel is None:
            continue
        rows[top], rows[sel] = rows[sel], rows[top]
        prow = rows[top]
        if prow[col] < 0:
            prow = [-x for x in prow]
        rows[top] = prow
        p = prow[col]
        for i in range(len(rows)):
            if i == top or not rows[i][col]:
                continue
            f = rows[i][col]
            g = gcd(p, f)
            a, b = p // g, f // g
            new = [a * x - b * y for x, y in zip(rows[i], prow)]
            c = reduce(gcd, new, 0)
            if c > 1:
                new = [x // c for x in new]
            rows[i] = new
        pivots.append(col)
        top += 1
    rows = rows[:top]
    for i, r in enumerate(rows):
        c = reduce(gcd, r, 0)
        if c > 1:
            rows[i] = [x // c for x in r]
    return rows, pivots


def rref(M) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form (nonzero rows only) and pivot columns."""
    rows, cols = _shape(M)
    ech, pivots = _int_echelon(_int_rows(rows), cols)
    out = []
    for r, p in zip(ech, pivots):
        out.append([Fraction(x, r[p]) for x in r])
    return out, pivots


def rank(M) -> int:
    """Rank over the rationals."""
    rows, cols = _shape(M)
    return len(_int_echelon(_int_rows(rows), cols)[1])


def _int_kernel(ech: list[list[int]], pivots: list[int], cols: int) -> list[tuple[int, ...]]:
    basis = []
    pivset = set(pivots)
    for f in range(cols):
        if f in pivset:
            continue
        L = reduce(lcm, (r[p] for r, p in zip(ech, pivots) if r[f]), 1)
        v = [0] * cols
        v[f] = L
        for r, p in zip(ech, pivots):
            if r[f]:
                v[p] = -r[f] * (L // r[p])
        basis.append(primitive(v))
    return basis


def kernel_basis(M) -> list[tuple[int, ...]]:
    """Right-kernel basis read off the reduced echelon form.

    One vector per free column, each scaled to coprime integers with its
    first nonzero entry positive.
    """
    rows, cols = _shape(M)
    ech, pivots = _int_echelon(_int_rows(rows), cols)
    return _int_kernel(ech, pivots, cols)


# ---------------------------------------------------------------------------
# exact simplex

class Infeasible(Exception):
    pass


class Unbounded(Exception):
    pass


def _simplex(A: list[list[Fraction]], b: list[Fraction], c: list[Fraction]) -> list[Fraction]:
    """Minimize ``c.x`` subject to ``A x = b, x >= 0``; Bland's rule, two phases.

    Fraction-free: the tableau is kept as integers ``M = D * B^-1 [A | b]``
    where D > 0 is the determinant of the current basis (Bareiss updates
    divide exactly).  True entries are ``M / D``.
    """
    m, n = len(A), len(c)
    M = []
    for i in range(m):
        row = [as_rational(v) for v in A[i]] + [as_rational(b[i])]
        L = lcm(*(v.denominator for v in row))
        row = [int(v * L) for v in row]
        if row[-1] < 0:
            row = [-v for v in row]
        M.append(row[:-1] + [int(k == i) for k in range(m)] + [row[-1]])
    basis = [n + i for i in range(m)]
    width = n + m
    D = 1

    def pivot(r, col, rows):
        nonlocal D
        pr = rows[r]
        p = pr[col]
        for i, row in enumerate(rows):
            if i == r:
                continue
            f = row[col]
            if f:
                rows[i] = [(p * a - f * b) // D for a, b in zip(row, pr)]
            elif p != D:
                rows[i] = [p * a // D for a in row]
        D = p
        if D < 0:
            for i, row in enumerate(rows):
                rows[i] = [-a for a in row]
            D = -D

    def run(cost, allowed):
        # reduced costs scaled by D, carried as an extra row
        cost = [as_rational(v) for v in cost]
        L = lcm(*(v.denominator for v in cost))
        cost = [int(v * L) for v in cost]
        red = [D * v for v in cost] + [0]
        for i, j in enumerate(basis):
            f = cost[j]
            if f:
                red = [a - f * b for a, b in zip(red, M[i])]
        rows = M + [red]
        while True:
            red = rows[-1]
            enter = None
            for j in range(width):
                if allowed[j] and red[j] < 0:
                    enter = j
                    break
            if enter is None:
                del rows[-1]
                M[:] = rows
                return
            leave = None
            for i in range(len(rows) - 1):
                a = rows[i][enter]
                if a > 0:
                    if leave is None:
                        leave = i
                        continue
                    # compare rhs_i / a with rhs_leave / a_leave
                    lhs = rows[i][-1] * rows[leave][enter]
                    rhs = rows[leave][-1] * a
                    if lhs < rhs or (lhs == rhs and basis[i] < basis[leave]):
                        leave = i
            if leave is None:
                raise Unbounded
            pivot(leave, enter, rows)
            basis[leave] = enter

    run([0] * n + [1] * m, [True] * width)
    if any(basis[i] >= n and M[i][-1] != 0 for i in range(len(M))):
        raise Infeasible
    # drive zero-level artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(M):
        if basis[i] >= n:
            j = next((j for j in range(n) if M[i][j] != 0), None)
            if j is None:
                del M[i]
                del basis[i]
                continue
            pivot(i, j, M)
            basis[i] = j
        i += 1
    run(list(c) + [0] * m, [True] * n + [False] * m)
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        x[j] = Fraction(M[i][-1], D)
    return x


def minimize(c, A_eq=(), b_eq=(), A_ge=(), b_ge=(), free: bool = True):
    """Exact LP: minimize ``c.x`` over ``A_eq x = b_eq``, ``A_ge x >= b_ge``.

    Variables are free when ``free`` is true, else nonnegative.  Returns the
    optimal point, or ``None`` if infeasible.  Raises ``Unbounded``.
    """
    n = len(c)
    c = [as_rational(v) for v in c]
    A_eq = [[as_rational(v) for v in r] for r in A_eq]
    A_ge = [[as_rational(v) for v in r] for r in A_ge]
    k = len(A_ge)
    if free:
        cols = lambda r: r + [-v for v in r]  # noqa: E731
        cost = c + [-v for v in c]
    else:
        cols = lambda r: list(r)  # noqa: E731
        cost = list(c)
    A, b = [], []
    for r, rhs in zip(A_eq, b_eq):
        A.append(cols(r) + [Fraction(0)] * k)
        b.append(as_rational(rhs))
    for i, (r, rhs) in enumerate(zip(A_ge, b_ge)):
        A.append(cols(r) + [Fraction(-int(j == i)) for j in range(k)])
        b.append(as_rational(rhs))
    try:
        x = _simplex(A, b, cost + [Fraction(0)] * k)
    except Infeasible:
        return None
    if free:
        return [x[i] - x[n + i] for i in range(n)]
    return x[:n]


def find_point(dim: int, A_eq=(), b_eq=(), A_ge=(), b_ge=()):
    """Some ``x`` with ``A_eq x = b_eq`` and ``A_ge x >= b_ge``, or ``None``.

    Among feasible points the one of least l1-norm found by the simplex is
    returned, which keeps certificates small.
    """
    A_eq, A_ge = list(A_eq), list(A_ge)
    # l1 objective: x = p - q with p, q >= 0, minimize sum(p + q)
    c = [Fraction(1)] * (2 * dim)
    eq = [list(r) + [-v for v in r] for r in A_eq]
    ge = [list(r) + [-v for v in r] for r in A_ge]
    sol = minimize(c, eq, b_eq, ge, b_ge, free=False)
    if sol is None:
        return None
    return [sol[i] - sol[dim + i] for i in range(dim)]


def positive_dependence(W: Sequence[Sequence]) -> tuple[int, ...] | None:
    """Integer dependence of W with every coefficient strictly positive, or None.

    Writes the coefficients as ``1 + mu`` with ``mu >= 0``, which leaves a
    small equality-only LP.
    """
    W = [[as_rational(x) for x in w] for w in W]
    if not W:
        return None
    n, dim = len(W), len(W[0])
    A = [[W[i][k] for i in range(n)] for k in range(dim)]
    b = [-sum(W[i][k] for i in range(n)) for k in range(dim)]
    mu = minimize([1] * n, A, b, free=False)
    if mu is None:
        return None
    return integer_scale([1 + m for m in mu])


def convex_combination(p: Sequence, Q: Sequence[Sequence]) -> list[Fraction] | None:
    """Nonnegative weights summing to 1 with ``sum w_i q_i = p``, or None."""
    Q = [[as_rational(x) for x in q] for q in Q]
    if not Q:
        return None
    n, dim = len(Q), len(p)
    A = [[Q[i][k] for i in range(n)] for k in range(dim)] + [[1] * n]
    b = [as_rational(x) for x in p] + [1]
    return minimize([0] * n, A, b, free=False)


# ---------------------------------------------------------------------------
# origin position / Farkas certificates

class Position(enum.Enum):
    OUTSIDE = "OUTSIDE"
    IN_RELINT = "IN_RELINT"
    IN_HULL_NOT_RELINT = "IN_HULL_NOT_RELINT"


@dataclass(frozen=True)
class OriginCertificate:
    """Where the origin sits relative to conv(W), with a witness.

    ``dependence`` is a nonnegative integer dependence of maximal support
    (absent for OUTSIDE).  ``functional`` is strictly positive on W for
    OUTSIDE; for IN_HULL_NOT_RELINT it vanishes on the support of the
    dependence and is strictly positive elsewhere.
    """

    position: Position
    dependence: tuple | None = None
    functional: tuple | None = None

    def verify(self, W: Sequence[Sequence]) -> bool:
        W = [[as_rational(x) for x in w] for w in W]
        dim = len(W[0]) if W else 0
        if self.position is Position.OUTSIDE:
            c = self.functional
            return c is not None and all(dot(c, w) > 0 for w in W)
        lam = self.dependence
        if lam is None or len(lam) != len(W) or any(x < 0 for x in lam) or not any(lam):
            return False
        if any(sum(l * w[k] for l, w in zip(lam, W)) != 0 for k in range(dim)):
            return False
        if self.position is Position.IN_RELINT:
            return all(x > 0 for x in lam)
        c = self.functional
        if c is None or all(x > 0 for x in lam):
            return False
        for l, w in zip(lam, W):
            val = dot(c, w)
            if (l > 0 and val != 0) or (l == 0 and val <= 0):
                return False
        return True


def _max_support_dependence(W: list[list[Fraction]]) -> list[Fraction]:
    """Nonnegative dependence of W whose support is as large as possible."""
    n = len(W)
    dim = len(W[0]) if W else 0
    # variables: lam (n), t (n), s (n), u (n);  t - lam + s = 0, t + u = 1
    nv = 4 * n
    A, b = [], []
    for k in range(dim):
        row = [Fraction(0)] * nv
        for i in range(n):
            row[i] = W[i][k]
        A.append(row)
        b.append(Fraction(0))
    for i in range(n):
        row = [Fraction(0)] * nv
        row[n + i] = Fraction(1)
        row[i] = Fraction(-1)
        row[2 * n + i] = Fraction(1)
        A.append(row)
        b.append(Fraction(0))
        row = [Fraction(0)] * nv
        row[n + i] = Fraction(1)
        row[3 * n + i] = Fraction(1)
        A.append(row)
        b.append(Fraction(1))
    cost = [Fraction(0)] * n + [Fraction(-1)] * n + [Fraction(0)] * (2 * n)
    x = _simplex(A, b, cost)
    lam = x[:n]
    return lam


def origin_position(W: Sequence[Sequence]) -> OriginCertificate:
    """Classify the origin against conv(W) and return a re-verifiable witness."""
    if not W:
        raise ValueError("origin_position needs a non-empty vector sequence")
    W = [[as_rational(x) for x in w] for w in W]
    dim = len(W[0])
    dep = positive_dependence(W)
    if dep is not None:
        return OriginCertificate(Position.IN_RELINT, dep, None)
    lam = _max_support_dependence(W)
    support = [i for i, x in enumerate(lam) if x > 0]
    if not support:
        c = strict_separation(W)
        return OriginCertificate(Position.OUTSIDE, None, c)
    dep = integer_scale(lam)
    if len(support) == len(W):
        return OriginCertificate(Position.IN_RELINT, dep, None)
    on = set(support)
    A_eq = [W[i] for i in support]
    A_ge = [W[i] for i in range(len(W)) if i not in on]
    c = find_point(dim, A_eq, [0] * len(A_eq), A_ge, [1] * len(A_ge))
    if c is None:  # pragma: no cover - excluded by Farkas
        raise AssertionError("no face functional for a maximal-support dependence")
    return OriginCertificate(Position.IN_HULL_NOT_RELINT, dep, integer_scale(c))


def strict_separation(T: Sequence[Sequence], dim: int | None = None) -> tuple[int, ...] | None:
    """Integer ``c`` with ``<c, v> > 0`` for every v in T, or ``None``.

    For empty T every ``c`` works; we return ``e_1`` of length ``dim`` (or
    the empty tuple when no dimension is given).
    """
    T = [[as_rational(x) for x in v] for v in T]
    if not T:
        if not dim:
            return ()
        return tuple(int(i == 0) for i in range(dim))
    d = len(T[0])
    c = find_point(d, A_ge=T, b_ge=[1] * len(T))
    if c is None:
        return None
    return integer_scale(c)
