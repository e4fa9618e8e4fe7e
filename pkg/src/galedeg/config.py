"""Point and vector configurations, Gale duality and the normalizing reductions.

Labels are carried through every operation: a configuration remembers which
original index each of its elements came from, so circuits, faces and
factors can be compared between a configuration, its dual and its minors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .exactnum import (
    Position,
    as_rational,
    dot,
    integer_scale,
    kernel_basis,
    origin_position,
    rank,
    rref,
    QMatrix,
)


class ConfigurationError(ValueError):
    pass


def _coerce(rows, width=None) -> tuple[tuple[Fraction, ...], ...]:
    out = tuple(tuple(as_rational(x) for x in r) for r in rows)
    if width is None and out:
        width = len(out[0])
    for r in out:
        if len(r) != width:
            raise ConfigurationError(f"expected coordinates of length {width}, got {len(r)}")
    return out


def _matrix_rank(vectors, width) -> int:
    if not vectors or width == 0:
        return 0
    return rank(QMatrix.from_columns(vectors, width))


def chart(vectors: Sequence[Sequence], width: int) -> tuple[list[tuple[Fraction, ...]], int]:
    """Coordinates of ``vectors`` with respect to a basis of their span.

    Uses the nonzero rows of the reduced echelon form of the column matrix,
    so two configurations related by an invertible linear map get identical
    charts.
    """
    n = len(vectors)
    if n == 0 or width == 0:
        return [() for _ in vectors], 0
    rows, _ = rref(QMatrix.from_columns(vectors, width))
    s = len(rows)
    return [tuple(rows[k][j] for k in range(s)) for j in range(n)], s


@dataclass(frozen=True)
class PointConfiguration:
    """Labeled points spanning R^dim affinely; repeated points allowed."""

    dim: int
    points: tuple
    labels: tuple = None

    def __post_init__(self):
        pts = _coerce(self.points, self.dim)
        object.__setattr__(self, "points", pts)
        labels = tuple(range(len(pts))) if self.labels is None else tuple(self.labels)
        if len(labels) != len(pts) or len(set(labels)) != len(labels):
            raise ConfigurationError("labels must be distinct, one per point")
        object.__setattr__(self, "labels", labels)
        if not pts:
            raise ConfigurationError("a point configuration needs at least one point")
        if _matrix_rank(homogenize(pts), self.dim + 1) != self.dim + 1:
            raise ConfigurationError(f"points do not affinely span R^{self.dim}")

    @classmethod
    def from_points(cls, points: Sequence[Sequence], labels: Iterable[int] | None = None):
        pts = _coerce(points)
        if not pts:
            raise ConfigurationError("a point configuration needs at least one point")
        return cls(len(pts[0]), pts, None if labels is None else tuple(labels))

    def __len__(self):
        return len(self.points)

    @property
    def n(self) -> int:
        return len(self.points)

    def index(self, label: int) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown label {label}") from None

    def point(self, label: int):
        return self.points[self.index(label)]

    def restrict(self, labels: Iterable[int]) -> PointConfiguration:
        """Sub-configuration re-embedded in its own affine span."""
        keep = [self.index(l) for l in sorted(labels)]
        return affine_chart([self.points[i] for i in keep], [self.labels[i] for i in keep])


@dataclass(frozen=True)
class VectorConfiguration:
    """Labeled vectors spanning R^rank; zero and repeated vectors allowed."""

    rank: int
    vectors: tuple
    labels: tuple = None

    def __post_init__(self):
        vecs = _coerce(self.vectors, self.rank)
        object.__setattr__(self, "vectors", vecs)
        labels = tuple(range(len(vecs))) if self.labels is None else tuple(self.labels)
        if len(labels) != len(vecs) or len(set(labels)) != len(labels):
            raise ConfigurationError("labels must be distinct, one per vector")
        object.__setattr__(self, "labels", labels)
        if _matrix_rank(vecs, self.rank) != self.rank:
            raise ConfigurationError(f"vectors do not span R^{self.rank}")

    @classmethod
    def from_vectors(cls, vectors: Sequence[Sequence], labels: Iterable[int] | None = None,
                     width: int | None = None):
        """Build from arbitrary vectors, re-charting if they do not span their ambient space."""
        vecs = _coerce(vectors, width)
        if width is None:
            if not vecs:
                raise ConfigurationError("give the ambient width for an empty configuration")
            width = len(vecs[0])
        coords, r = chart(vecs, width)
        if r == width:
            coords = vecs
        return cls(r, tuple(coords), None if labels is None else tuple(labels))

    def __len__(self):
        return len(self.vectors)

    @property
    def n(self) -> int:
        return len(self.vectors)

    @property
    def d(self) -> int:
        """The ``d`` in ``n = r + d + 1``."""
        return self.n - self.rank - 1

    def index(self, label: int) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown label {label}") from None

    def vector(self, label: int):
        return self.vectors[self.index(label)]

    def restrict(self, labels: Iterable[int]) -> VectorConfiguration:
        """Restriction to ``labels`` inside its own linear span."""
        keep = [self.index(l) for l in sorted(labels)]
        return VectorConfiguration.from_vectors(
            [self.vectors[i] for i in keep], [self.labels[i] for i in keep], self.rank)


def homogenize(points: Sequence[Sequence]) -> list[tuple]:
    return [tuple(p) + (Fraction(1),) for p in points]


def affine_chart(points: Sequence[Sequence], labels: Sequence[int]) -> PointConfiguration:
    """Re-express points in coordinates of their affine span (first point at 0)."""
    pts = _coerce(points)
    base = pts[0]
    diffs = [tuple(a - b for a, b in zip(p, base)) for p in pts]
    coords, s = chart(diffs, len(base))
    return PointConfiguration(s, tuple(coords), tuple(labels))


# ---------------------------------------------------------------------------
# hyperplanes

@dataclass(frozen=True)
class Hyperplane:
    """Oriented linear hyperplane ``{x : <normal, x> = 0}``."""

    normal: tuple

    def __post_init__(self):
        normal = integer_scale(self.normal)
        if not any(normal):
            raise ConfigurationError("hyperplane normal must be nonzero")
        object.__setattr__(self, "normal", normal)

    def side(self, x) -> int:
        v = dot(self.normal, x)
        return (v > 0) - (v < 0)

    def positive(self, V: VectorConfiguration) -> list[int]:
        return [l for l, v in zip(V.labels, V.vectors) if self.side(v) > 0]

    def negative(self, V: VectorConfiguration) -> list[int]:
        return [l for l, v in zip(V.labels, V.vectors) if self.side(v) < 0]

    def on(self, V: VectorConfiguration) -> list[int]:
        return [l for l, v in zip(V.labels, V.vectors) if self.side(v) == 0]

    def __neg__(self):
        return Hyperplane(tuple(-x for x in self.normal))


@dataclass(frozen=True)
class ComposedHyperplane:
    """``h1 o h2``: normal ``n1 + eps*n2`` for an infinitesimal ``eps``.

    Signs are lexicographic: the sign under ``h1`` unless the point lies on
    ``h1``, in which case the sign under ``h2``.  No numeric epsilon is
    chosen.
    """

    first: Hyperplane | ComposedHyperplane
    second: Hyperplane | ComposedHyperplane

    def side(self, x) -> int:
        s = self.first.side(x)
        return s if s else self.second.side(x)

    def positive(self, V):
        return [l for l, v in zip(V.labels, V.vectors) if self.side(v) > 0]

    def negative(self, V):
        return [l for l, v in zip(V.labels, V.vectors) if self.side(v) < 0]

    def on(self, V):
        return [l for l, v in zip(V.labels, V.vectors) if self.side(v) == 0]


def compose(h1, h2) -> ComposedHyperplane:
    return ComposedHyperplane(h1, h2)


def spanned_hyperplanes(V: VectorConfiguration):
    """Yield ``(labels, Hyperplane)`` for every hyperplane spanned by vectors of V.

    Each hyperplane appears once, keyed by the lexicographically first
    independent ``(r-1)``-subset spanning it.
    """
    r = V.rank
    if r == 0:
        return
    seen = set()
    for idx in combinations(range(V.n), r - 1):
        sub = [V.vectors[i] for i in idx]
        if r > 1 and _matrix_rank(sub, r) != r - 1:
            continue
        if r == 1:
            normal = (1,)
        else:
            ker = kernel_basis(QMatrix.from_rows(sub, r))
            normal = ker[0]
        if normal in seen:
            continue
        seen.add(normal)
        yield tuple(V.labels[i] for i in idx), Hyperplane(normal)


# ---------------------------------------------------------------------------
# Gale duality, deletion, contraction

def gale_dual(A: PointConfiguration) -> VectorConfiguration:
    """Gale dual from the reduced-echelon kernel basis of the homogenized matrix.

    Vector ``j`` of the result collects the ``j``-th entries of the kernel
    basis vectors; labels are inherited from ``A``.
    """
    n, d = A.n, A.dim
    if n < d + 1:
        raise ConfigurationError(f"{n} points cannot span R^{d}")
    M = QMatrix.from_columns(homogenize(A.points), d + 1)
    basis = kernel_basis(M)
    r = len(basis)
    assert r == n - d - 1
    vectors = tuple(tuple(Fraction(b[j]) for b in basis) for j in range(n))
    return VectorConfiguration(r, vectors, A.labels)


def delete(V: VectorConfiguration, label: int) -> VectorConfiguration:
    i = V.index(label)
    vecs = V.vectors[:i] + V.vectors[i + 1:]
    labels = V.labels[:i] + V.labels[i + 1:]
    return VectorConfiguration.from_vectors(vecs, labels, V.rank)


def contract(V: VectorConfiguration, label: int) -> VectorConfiguration:
    """Contraction ``V/v``: project along ``v`` orthogonally, then drop ``v``.

    The projected vectors are re-charted into ``R^(r-1)``.  Contracting a
    zero vector is the same as deleting it.
    """
    i = V.index(label)
    v = V.vectors[i]
    if not any(v):
        return delete(V, label)
    vv = dot(v, v)
    out, labels = [], []
    for j, (l, w) in enumerate(zip(V.labels, V.vectors)):
        if j == i:
            continue
        t = dot(v, w) / vv
        out.append(tuple(a - t * b for a, b in zip(w, v)))
        labels.append(l)
    return VectorConfiguration.from_vectors(out, labels, V.rank)


def contract_set(V: VectorConfiguration, labels: Iterable[int], order: Sequence[int] | None = None
                 ) -> VectorConfiguration:
    """Iterated contraction of every label in ``labels`` (lowest first by default)."""
    labels = list(labels)
    for l in labels:
        V.index(l)
    seq = sorted(labels) if order is None else list(order)
    if sorted(seq) != sorted(labels):
        raise ValueError("order must be a permutation of labels")
    for l in seq:
        V = contract(V, l)
    return V


def delete_set(V: VectorConfiguration, labels: Iterable[int]) -> VectorConfiguration:
    drop = set(labels)
    for l in drop:
        V.index(l)
    keep = [l for l in V.labels if l not in drop]
    return V.restrict(keep) if keep else VectorConfiguration(0, (), ())


# ---------------------------------------------------------------------------
# structural predicates

def is_totally_cyclic(V: VectorConfiguration) -> bool:
    """Every open halfspace through the origin contains a vector of V."""
    if V.rank == 0:
        return True
    return origin_position(V.vectors).position is Position.IN_RELINT


def purity_violations(V: VectorConfiguration):
    """Yield ``(hyperplane, positive labels, negative labels)`` with at most one on each side.

    A violating hyperplane contains all but at most two vectors, so it is
    enough to look at hyperplanes spanned by the complement of at most two
    vectors.
    """
    r, n = V.rank, V.n
    if r == 0:
        return
    seen = set()
    for k in (1, 2):
        for off in combinations(range(n), k):
            rest = [V.vectors[i] for i in range(n) if i not in off]
            if _matrix_rank(rest, r) != r - 1:
                continue
            if r == 1:
                normal = (1,)
            else:
                normal = kernel_basis(QMatrix.from_rows(rest, r))[0]
            h = Hyperplane(normal)
            if h.normal in seen:
                continue
            seen.add(h.normal)
            pos, neg = h.positive(V), h.negative(V)
            if len(pos) <= 1 and len(neg) <= 1:
                yield h, pos, neg


def is_pure(V: VectorConfiguration) -> bool:
    return next(purity_violations(V), None) is None


def is_irreducible(V: VectorConfiguration) -> bool:
    return all(any(v) for v in V.vectors)


def strip_zeros(V: VectorConfiguration) -> VectorConfiguration:
    keep = [(l, v) for l, v in zip(V.labels, V.vectors) if any(v)]
    return VectorConfiguration(V.rank, tuple(v for _, v in keep), tuple(l for l, _ in keep))


def dedup_points(A: PointConfiguration) -> tuple[PointConfiguration, dict[int, int]]:
    """Drop exact duplicates, keeping the first label of each point.

    Returns the reduced configuration and a map from kept label to
    multiplicity.
    """
    first: dict[tuple, int] = {}
    mult: dict[int, int] = {}
    keep = []
    for l, p in zip(A.labels, A.points):
        if p in first:
            mult[first[p]] += 1
        else:
            first[p] = l
            mult[l] = 1
            keep.append((l, p))
    B = PointConfiguration(A.dim, tuple(p for _, p in keep), tuple(l for l, _ in keep))
    return B, mult


def _apex_positions(points) -> list[int]:
    n = len(points)
    if n < 2:
        return []
    width = len(points[0]) + 1
    full = _matrix_rank(homogenize(points), width)
    out = []
    for i in range(n):
        rest = homogenize(points[:i] + points[i + 1:])
        if _matrix_rank(rest, width) < full:
            out.append(i)
    return out


def strip_pyramids(A: PointConfiguration) -> tuple[PointConfiguration, list[int]]:
    """Remove pyramid apices until none is left.

    A point is an apex when it lies outside the affine span of the other
    points.  The lowest-labeled apex goes first; the base is re-embedded in
    its own affine span after every removal.
    """
    apices: list[int] = []
    B = A
    while True:
        cand = _apex_positions(list(B.points))
        if not cand:
            return B, apices
        i = min(cand, key=lambda k: B.labels[k])
        apices.append(B.labels[i])
        keep = [k for k in range(B.n) if k != i]
        B = affine_chart([B.points[k] for k in keep], [B.labels[k] for k in keep])


def is_pyramid(A: PointConfiguration) -> int | None:
    cand = _apex_positions(list(A.points))
    return min((A.labels[i] for i in cand), default=None)


# ---------------------------------------------------------------------------
# reductions

def totally_cyclic_reduction(V: VectorConfiguration) -> list[int]:
    """Labels of a totally cyclic subconfiguration with the same dual codegree.

    While V is not totally cyclic, restrict to ``V & h`` for a spanned
    hyperplane ``h`` with an empty open negative side.
    """
    from .degree import dual_codegree

    if dual_codegree(V) < 1:
        raise ConfigurationError("dual codegree is 0: the origin is outside conv(V)")
    W = V
    while not is_totally_cyclic(W):
        for _, h in spanned_hyperplanes(W):
            pos, neg = h.positive(W), h.negative(W)
            if not neg or not pos:
                W = W.restrict(h.on(W))
                break
        else:  # pragma: no cover - a non-totally-cyclic configuration has such a facet
            raise AssertionError("no supporting hyperplane found")
    return list(W.labels)


def pure_reduction(V: VectorConfiguration) -> tuple[list[int], VectorConfiguration]:
    """Contract vectors until the quotient is pure.

    Each round contracts the lowest label lying strictly off some purity
    violating hyperplane.  Dual degree preservation is checked before
    returning.
    """
    from .degree import dual_degree

    if not is_totally_cyclic(V):
        raise ConfigurationError("pure_reduction expects a totally cyclic configuration")
    contracted: list[int] = []
    Q = V
    while True:
        off = set()
        for _, pos, neg in purity_violations(Q):
            off.update(pos)
            off.update(neg)
        if not off:
            break
        l = min(off)
        contracted.append(l)
        Q = contract(Q, l)
    if contracted:
        before, after = dual_degree(V).degree, dual_degree(Q).degree
        if before != after:
            raise AssertionError(
                f"pure reduction changed the dual degree ({before} -> {after})")
    return contracted, Q
