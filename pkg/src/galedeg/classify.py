"""Recognition of point configurations of degree at most one.

After removing repeated points, a configuration of degree <= 1 is one of:
dimension <= 1; a pyramid (possibly iterated) over a polygon without
interior points; a pyramid over a prism over a simplex whose extra points
sit on the vertical edges; or a simplex whose extra points sit on the edges
at one vertex.  Every recognized structure is returned with labels that can
be re-checked against the facets and by exact segment membership.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .config import PointConfiguration, dedup_points, is_pyramid, strip_pyramids
from .degree import degree_primal, facets, is_interior_face
from .exactnum import convex_combination

__all__ = [
    "Kind",
    "Classification",
    "classify_low_degree",
    "verify_classification",
    "is_pyramid",
    "vertices",
]


class Kind(enum.Enum):
    DIM_LE_1 = "DIM_LE_1"
    SIMPLEX_DEG0 = "SIMPLEX_DEG0"
    PYRAMID = "PYRAMID"
    POLYGON_NO_INTERIOR = "POLYGON_NO_INTERIOR"
    PRISM_OVER_SIMPLEX_EDGE_POINTS = "PRISM_OVER_SIMPLEX_EDGE_POINTS"
    SIMPLEX_EDGE_POINTS_AT_VERTEX = "SIMPLEX_EDGE_POINTS_AT_VERTEX"
    NOT_DEG_LE_1 = "NOT_DEG_LE_1"


@dataclass(frozen=True)
class Classification:
    """Outcome of :func:`classify_low_degree`.

    Only the fields belonging to ``kind`` are filled in:

    * PYRAMID: ``apices`` and ``inner`` (classification of the base)
    * PRISM_...: ``top``, ``bottom``, ``vertical`` (top, bottom) pairs and
      ``edge_points`` mapping a point label to its vertical edge
    * SIMPLEX_EDGE_...: ``apex_vertex`` and ``edge_lists`` mapping the other
      end of each edge at the apex to the points on it
    * NOT_DEG_LE_1: ``witness``, an interior face of size <= d - 1
    """

    kind: Kind
    dim: int
    labels: tuple
    dedup_multiplicities: dict = field(default_factory=dict)
    apices: tuple = ()
    inner: Classification | None = None
    top: tuple = ()
    bottom: tuple = ()
    vertical: tuple = ()
    edge_points: dict = field(default_factory=dict)
    apex_vertex: int | None = None
    edge_lists: dict = field(default_factory=dict)
    witness: tuple = ()

    def case(self) -> Kind:
        """The kind, looking through pyramid wrappers."""
        c = self
        while c.kind is Kind.PYRAMID:
            c = c.inner
        return c.kind


# ---------------------------------------------------------------------------
# geometric helpers

def vertices(A: PointConfiguration) -> tuple:
    """Labels of the vertices of conv(A) (A without repeated points)."""
    out = []
    for i, p in enumerate(A.points):
        others = [q for j, q in enumerate(A.points) if j != i]
        if convex_combination(p, others) is None:
            out.append(A.labels[i])
    return tuple(sorted(out))


def _strictly_between(p, u, w) -> bool:
    """p = u + t (w - u) for some 0 < t < 1."""
    t = None
    for a, b, c in zip(p, u, w):
        step = c - b
        if step == 0:
            if a != b:
                return False
            continue
        s = Fraction(a - b) / step
        if t is None:
            t = s
        elif s != t:
            return False
    return t is not None and 0 < t < 1


class _Hull:
    """Vertex and edge structure of conv(A), read off its facets."""

    def __init__(self, A: PointConfiguration):
        self.A = A
        self.verts = vertices(A)
        vs = set(self.verts)
        self.facets = facets(A)
        self.facet_verts = [frozenset(f.members) & vs for f in self.facets]

    def is_edge(self, u, w) -> bool:
        common = None
        for fv in self.facet_verts:
            if u in fv and w in fv:
                common = fv if common is None else common & fv
        return common is not None and common == {u, w}

    def segment_of(self, label, pairs):
        p = self.A.point(label)
        for u, w in pairs:
            if _strictly_between(p, self.A.point(u), self.A.point(w)):
                return u, w
        return None


def _recognize_prism(A: PointConfiguration) -> Classification | None:
    d = A.dim
    H = _Hull(A)
    V = H.verts
    if d < 2 or len(V) != 2 * d:
        return None
    simplices = sorted({tuple(sorted(fv)) for fv in H.facet_verts if len(fv) == d})
    for top, bottom in combinations(simplices, 2):
        if set(top) & set(bottom) or set(top) | set(bottom) != set(V):
            continue
        pairs = []
        for u in top:
            partners = [w for w in bottom if H.is_edge(u, w)]
            if len(partners) != 1:
                break
            pairs.append((u, partners[0]))
        else:
            if len({w for _, w in pairs}) != d:
                continue
            assign = {}
            for l in sorted(set(A.labels) - set(V)):
                seg = H.segment_of(l, pairs)
                if seg is None:
                    break
                assign[l] = seg
            else:
                return Classification(
                    Kind.PRISM_OVER_SIMPLEX_EDGE_POINTS, d, tuple(sorted(A.labels)),
                    top=top, bottom=bottom, vertical=tuple(pairs), edge_points=assign)
    return None


def _recognize_simplex_edges(A: PointConfiguration) -> Classification | None:
    d = A.dim
    V = vertices(A)
    if len(V) != d + 1:
        return None
    edges = list(combinations(V, 2))
    extra = sorted(set(A.labels) - set(V))
    found = {}
    for l in extra:
        p = A.point(l)
        seg = next((e for e in edges
                    if _strictly_between(p, A.point(e[0]), A.point(e[1]))), None)
        if seg is None:
            return None
        found[l] = seg
    common = set(V)
    for u, w in found.values():
        common &= {u, w}
    if not common:
        return None
    a = min(common)
    lists = {v: () for v in V if v != a}
    for l, (u, w) in found.items():
        other = w if u == a else u
        lists[other] = lists[other] + (l,)
    return Classification(
        Kind.SIMPLEX_EDGE_POINTS_AT_VERTEX, d, tuple(sorted(A.labels)),
        apex_vertex=a, edge_lists=lists)


def _polygon(A: PointConfiguration) -> Classification | None:
    if A.dim != 2:
        return None
    if any(is_interior_face(A, [l]) for l in A.labels):
        return None
    return Classification(Kind.POLYGON_NO_INTERIOR, 2, tuple(sorted(A.labels)))


def _wrap(apices, inner: Classification, dim, labels) -> Classification:
    if not apices:
        return inner
    return Classification(Kind.PYRAMID, dim, labels, apices=tuple(apices), inner=inner)


def classify_low_degree(A: PointConfiguration) -> Classification:
    """Which case of the degree <= 1 classification A falls into, if any."""
    B, mult = dedup_points(A)
    d = B.dim
    labels = tuple(sorted(B.labels))
    rep = degree_primal(B)
    delta = rep.degree

    def done(c: Classification) -> Classification:
        object.__setattr__(c, "dedup_multiplicities", dict(mult))
        return c

    if delta >= 2:
        return done(Classification(Kind.NOT_DEG_LE_1, d, labels, witness=rep.witness_interior_face))
    if delta == 0:
        return done(Classification(Kind.SIMPLEX_DEG0, d, labels))
    if d <= 1:
        return done(Classification(Kind.DIM_LE_1, d, labels))
    if d == 2:
        c = _polygon(B)
        if c is None:
            raise AssertionError("degree-1 plane configuration with an interior point")
        return done(c)

    base, apices = strip_pyramids(B)
    if base.dim >= 3:
        prism = _recognize_prism(base)
        if prism is not None:
            return done(_wrap(apices, prism, d, labels))
    simplex = _recognize_simplex_edges(B)
    if simplex is not None:
        return done(simplex)
    if base.dim <= 2:
        # keep the apices whose removal leaves a plane configuration
        k = d - 2
        plane = B.restrict(set(B.labels) - set(apices[:k]))
        c = _polygon(plane)
        if c is not None:
            return done(_wrap(apices[:k], c, d, labels))
    raise AssertionError(f"degree-1 configuration not recognized: {B}")


# ---------------------------------------------------------------------------
# re-verification

def verify_classification(A: PointConfiguration, c: Classification) -> bool:
    """Re-check the structural claims of ``c`` against A from scratch."""
    B, mult = dedup_points(A)
    if dict(mult) != dict(c.dedup_multiplicities):
        return False
    return _verify(B, c)


def _verify(B: PointConfiguration, c: Classification) -> bool:
    if set(c.labels) != set(B.labels) or c.dim != B.dim:
        return False
    k = c.kind
    if k is Kind.NOT_DEG_LE_1:
        w = c.witness
        return 0 < len(w) <= B.dim - 1 and is_interior_face(B, w)
    if k is Kind.SIMPLEX_DEG0:
        return B.n == B.dim + 1
    if k is Kind.DIM_LE_1:
        return B.dim <= 1
    if k is Kind.POLYGON_NO_INTERIOR:
        return B.dim == 2 and not any(is_interior_face(B, [l]) for l in B.labels)
    if k is Kind.PYRAMID:
        base = B
        for a in c.apices:
            if not is_pyramid_apex(base, a):
                return False
            base = base.restrict(set(base.labels) - {a})
        return c.inner is not None and _verify(base, c.inner)
    if k is Kind.PRISM_OVER_SIMPLEX_EDGE_POINTS:
        H = _Hull(B)
        d = B.dim
        fsets = {tuple(sorted(fv)) for fv in H.facet_verts}
        if tuple(sorted(c.top)) not in fsets or tuple(sorted(c.bottom)) not in fsets:
            return False
        if len(c.top) != d or len(c.bottom) != d or set(c.top) & set(c.bottom):
            return False
        if set(c.top) | set(c.bottom) != set(H.verts):
            return False
        if sorted(u for u, _ in c.vertical) != sorted(c.top):
            return False
        if sorted(w for _, w in c.vertical) != sorted(c.bottom):
            return False
        if not all(H.is_edge(u, w) for u, w in c.vertical):
            return False
        if set(c.edge_points) != set(B.labels) - set(H.verts):
            return False
        return all(tuple(e) in set(c.vertical)
                   and _strictly_between(B.point(l), B.point(e[0]), B.point(e[1]))
                   for l, e in c.edge_points.items())
    if k is Kind.SIMPLEX_EDGE_POINTS_AT_VERTEX:
        V = vertices(B)
        a = c.apex_vertex
        if len(V) != B.dim + 1 or a not in V:
            return False
        listed = [l for pts in c.edge_lists.values() for l in pts]
        if sorted(listed) != sorted(set(B.labels) - set(V)):
            return False
        return all(v in V and v != a
                   and all(_strictly_between(B.point(l), B.point(a), B.point(v)) for l in pts)
                   for v, pts in c.edge_lists.items())
    return False


def is_pyramid_apex(A: PointConfiguration, label) -> bool:
    """Whether ``label`` lies outside the affine span of the other points."""
    rest = [l for l in A.labels if l != label]
    if not rest or label not in A.labels:
        return False
    sub = A.restrict(rest)
    return sub.dim < A.dim
