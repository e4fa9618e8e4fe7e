"""Halfspace depth and Tverberg order of a query point.

Both reduce to the vector configuration of the points seen from the query
point: the depth is its dual codegree, the Tverberg order is the length of
its longest weak Cayley decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .circuits import max_weak_cayley
from .config import Hyperplane, PointConfiguration, VectorConfiguration
from .degree import dual_degree
from .exactnum import Position, as_rational, dot, origin_position, strict_separation


def _points_and_labels(S) -> tuple[list[tuple], tuple]:
    if isinstance(S, PointConfiguration):
        return list(S.points), S.labels
    pts = [tuple(as_rational(x) for x in p) for p in S]
    return pts, tuple(range(len(pts)))


def _translate(S, x) -> tuple[list[tuple], tuple, tuple, VectorConfiguration]:
    pts, labels = _points_and_labels(S)
    x = tuple(as_rational(c) for c in x)
    width = len(x)
    if any(len(p) != width for p in pts):
        raise ValueError(f"query point has dimension {width}, points have {len(pts[0])}")
    diffs = [tuple(a - b for a, b in zip(p, x)) for p in pts]
    V = VectorConfiguration.from_vectors(diffs, labels, width)
    return diffs, labels, x, V


@dataclass(frozen=True)
class DepthReport:
    """Depth ``m`` and a halfspace ``{y : <normal, y - x> >= 0}`` holding exactly m points."""

    depth: int
    witness_halfspace: Hyperplane | None
    point: tuple

    def verify(self, S) -> bool:
        pts, _ = _points_and_labels(S)
        if self.witness_halfspace is None:
            return self.depth == len(pts)
        c = self.witness_halfspace.normal
        inside = sum(1 for p in pts
                     if dot(c, [a - b for a, b in zip(p, self.point)]) >= 0)
        return inside == self.depth


@dataclass(frozen=True)
class TverbergReport:
    order: int
    partition: tuple
    point: tuple

    def verify(self, S) -> bool:
        return verify_tverberg_partition(S, self.point, self.partition)


def halfspace_depth(S, x: Sequence) -> DepthReport:
    """Minimum number of points of S in a closed halfspace containing x."""
    diffs, labels, x, V = _translate(S, x)
    rep = dual_degree(V)
    m = rep.codegree
    outside = [d for l, d in zip(labels, diffs) if l not in set(rep.witness_interior_face)]
    h = None
    if len(x):
        c = strict_separation(outside, dim=len(x))
        h = Hyperplane(tuple(-v for v in c))
    return DepthReport(m, h, x)


def tverberg_order(S, x: Sequence) -> TverbergReport:
    """Largest m with m disjoint subsets of S each containing x in its convex hull."""
    _, _, x, V = _translate(S, x)
    D = max_weak_cayley(V)
    return TverbergReport(D.length, D.factors, x)


def verify_tverberg_partition(S, x: Sequence, partition) -> bool:
    """Check disjointness and ``x in conv(S_i)`` (closed hull) for every part."""
    pts, labels = _points_and_labels(S)
    x = tuple(as_rational(c) for c in x)
    at = {l: p for l, p in zip(labels, pts)}
    seen: set = set()
    for part in partition:
        part = list(part)
        if not part or seen & set(part) or any(l not in at for l in part):
            return False
        seen |= set(part)
        W = [tuple(a - b for a, b in zip(at[l], x)) for l in part]
        if origin_position(W).position is Position.OUTSIDE:
            return False
    return True


@dataclass(frozen=True)
class CoreTverbergCheck:
    depth: int
    order: int
    bound: int
    satisfied: bool
    conjecture_bound: int
    conjecture_holds: bool


def check_core_tverberg(S, x: Sequence) -> CoreTverbergCheck:
    """Compare the Tverberg order at x with ``3m - 2(n - r)`` for depth m.

    r is the rank of the points seen from x, which is the ambient dimension
    whenever S spans it.  ``satisfied`` must always come out true.  The
    conjectured bound ``2m - (n - r)`` is recorded alongside but never
    enforced.
    """
    _, _, _, V = _translate(S, x)
    n, r = V.n, V.rank
    m = halfspace_depth(S, x).depth
    t = tverberg_order(S, x).order
    bound = 3 * m - 2 * (n - r)
    conj = 2 * m - (n - r)
    return CoreTverbergCheck(m, t, bound, t >= bound, conj, t >= conj)
