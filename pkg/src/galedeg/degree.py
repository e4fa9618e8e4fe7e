"""Degree and codegree of point configurations and their Gale duals.

Primal side: a set of points is an interior face when it lies in no facet,
and the codegree is the size of the smallest one.  Dual side: a set of
vectors can be pushed into an open halfspace exactly when it contains no
positive circuit, so the dual codegree is a minimum hitting set of the
positive circuits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .circuits import positive_circuit_masks
from .config import (
    ConfigurationError,
    Hyperplane,
    PointConfiguration,
    VectorConfiguration,
    contract_set,
    dedup_points,
    homogenize,
)
from .exactnum import (
    QMatrix,
    dot,
    integer_scale,
    kernel_basis,
    positive_dependence,
    rank,
    strict_separation,
)
from .setsys import bits, mask_of, min_hitting_set, min_hitting_set_size


@dataclass(frozen=True)
class Facet:
    """A facet of conv(A): homogenized normal ``(c, c0)`` with ``<c,a> + c0 >= 0`` on A."""

    support: Hyperplane
    members: tuple

    def value(self, point) -> Fraction:
        return dot(self.support.normal, tuple(point) + (1,))


@dataclass(frozen=True)
class DegreeReport:
    degree: int
    codegree: int
    witness_interior_face: tuple
    witness_hyperplane: Hyperplane | None = None


def _facet_masks(A: PointConfiguration) -> list[tuple[int, tuple]]:
    """(member positions mask, homogenized normal) for every facet."""
    d = A.dim
    if d == 0:
        return []
    H = [integer_scale(p) for p in homogenize(A.points)]
    n = len(H)
    found: dict[int, tuple] = {}
    covered: list[int] = []
    for idx in combinations(range(n), d):
        m = mask_of(idx)
        if any(m & f == m for f in covered):
            continue
        ker = kernel_basis(QMatrix.from_rows([H[i] for i in idx], d + 1))
        if len(ker) != 1:
            continue
        c = ker[0]
        vals = [dot(c, h) for h in H]
        if any(v > 0 for v in vals) and any(v < 0 for v in vals):
            continue
        if any(v < 0 for v in vals):
            c = tuple(-x for x in c)
        members = mask_of(i for i, v in enumerate(vals) if v == 0)
        if members not in found:
            found[members] = c
            covered.append(members)
    return list(found.items())


def facets(A: PointConfiguration) -> list[Facet]:
    """Every facet of conv(A) with its full member set, sorted by sorted member labels."""
    out = []
    for mask, normal in _facet_masks(A):
        members = tuple(sorted(A.labels[i] for i in bits(mask)))
        out.append(Facet(Hyperplane(normal), members))
    return sorted(out, key=lambda f: f.members)


def is_interior_face(A: PointConfiguration, S) -> bool:
    S = set(S)
    if not S:
        raise ValueError("an interior face must be non-empty")
    for l in S:
        A.index(l)
    return not any(S <= set(f.members) for f in facets(A))


def _smallest_interior(A: PointConfiguration) -> tuple[int, ...]:
    fmasks = [m for m, _ in _facet_masks(A)]
    order = sorted(range(A.n), key=lambda i: A.labels[i])
    for k in range(1, A.dim + 2):
        for idx in combinations(order, k):
            m = mask_of(idx)
            if not any(m & f == m for f in fmasks):
                return tuple(A.labels[i] for i in idx)
    raise AssertionError("d+1 affinely independent points always form an interior face")


def degree_primal(A: PointConfiguration) -> DegreeReport:
    """Degree via the smallest label set contained in no facet (on deduplicated points)."""
    B, _ = dedup_points(A)
    face = _smallest_interior(B)
    kappa = len(face)
    return DegreeReport(A.dim + 1 - kappa, kappa, face)


def dual_codegree(V: VectorConfiguration) -> int:
    """``min_h |closed h+ & V|``: smallest set meeting every positive circuit."""
    masks, _ = positive_circuit_masks(V)
    return min_hitting_set_size(masks)


def dual_degree(V: VectorConfiguration) -> DegreeReport:
    """Dual degree ``max_h |h+ & V| - r`` with a hyperplane attaining it.

    The complement of the lexicographically first minimum hitting set of the
    positive circuits is the largest set avoiding the origin; a strictly
    separating functional for it is the hyperplane witness.
    """
    masks, order = positive_circuit_masks(V)
    hit = min_hitting_set(masks, len(order))
    kappa = len(hit)
    face = tuple(order[i] for i in hit)
    delta = V.n - V.rank - kappa
    T = [V.vector(l) for l in order if l not in set(face)]
    h = None
    if V.rank:
        c = strict_separation(T, dim=V.rank)
        h = Hyperplane(c)
    return DegreeReport(delta, kappa, face, h)


def degree_oracle(A: PointConfiguration) -> int:
    """Degree by brute force, independent of facets and circuits.

    A subset is an interior face iff its barycenter is an interior point of
    conv(A), i.e. iff the translated points have a dependence with every
    coefficient strictly positive.  All subsets of each size are examined,
    smallest size first.
    """
    pts = list(A.points)
    n, d = len(pts), A.dim
    for k in range(1, n + 1):
        for idx in combinations(range(n), k):
            bary = [sum(pts[i][j] for i in idx) / k for j in range(d)]
            W = [tuple(p[j] - bary[j] for j in range(d)) for p in pts]
            if positive_dependence(W) is not None:
                return d + 1 - k
    raise AssertionError("no interior face found")


def section_quotient_degrees(V: VectorConfiguration, W) -> tuple[int, int, int]:
    """Dual degrees of the section ``V & lin(W)``, the quotient ``V/W`` and V.

    W must be closed: every vector of V lying in ``lin(W)`` belongs to W.
    The inequality ``delta_V >= delta_W + delta_quotient`` is asserted.
    """
    W = sorted(set(W))
    for l in W:
        V.index(l)
    span = [V.vector(l) for l in W]
    base = rank(QMatrix.from_columns(span, V.rank)) if span and V.rank else 0
    for l in V.labels:
        if l in W:
            continue
        v = V.vector(l)
        if (rank(QMatrix.from_columns(span + [v], V.rank)) if V.rank else 0) == base:
            raise ConfigurationError(f"label {l} lies in lin(W) but not in W")
    d_sec = dual_degree(V.restrict(W)).degree
    d_quo = dual_degree(contract_set(V, W)).degree
    d_all = dual_degree(V).degree
    if d_all < d_sec + d_quo:
        raise AssertionError(
            f"section/quotient inequality violated: {d_all} < {d_sec} + {d_quo}")
    return d_sec, d_quo, d_all
