"""Point and vector configurations from the worked examples, plus random ones.

All randomness goes through a caller-supplied ``random.Random`` (or a seed),
so every generator is reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .config import (
    ConfigurationError,
    PointConfiguration,
    VectorConfiguration,
    is_totally_cyclic,
)
from .exactnum import QMatrix, rank

PENTAGON = ((0, 0), (4, 0), (5, 3), (2, 5), (-1, 3))


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def _unit(i, d):
    return tuple(int(k == i) for k in range(d))


def pentagon() -> PointConfiguration:
    """A convex pentagon with integer vertices and no three points collinear."""
    return PointConfiguration.from_points(PENTAGON)


def pentagon_join(k: int) -> PointConfiguration:
    """Join of k pentagons: 5k points spanning dimension 3k - 1.

    Pentagon j lives in its own coordinate plane; for j >= 1 it is lifted by
    a unit vector in one of k - 1 extra coordinates.
    """
    if k < 1:
        raise ValueError("pentagon-join needs k >= 1")
    dim = 3 * k - 1
    pts = []
    for j in range(k):
        for p in PENTAGON:
            x = [0] * dim
            x[2 * j], x[2 * j + 1] = p
            if j:
                x[2 * k + j - 1] = 1
            pts.append(tuple(x))
    return PointConfiguration.from_points(pts)


def lawrence(r: int, n: int, seed=0) -> VectorConfiguration:
    """Centrally symmetric vectors ``v1, -v1, v2, -v2, ...`` spanning R^r.

    The first r of the v's are the unit vectors; further ones are random
    nonzero small-integer vectors.
    """
    if r < 1 or n % 2 or n < 2 * r:
        raise ValueError("lawrence needs r >= 1 and an even n >= 2r")
    rng = _rng(seed)
    base = [_unit(i, r) for i in range(r)]
    while len(base) < n // 2:
        v = tuple(rng.randint(-2, 2) for _ in range(r))
        if any(v):
            base.append(v)
    vecs = []
    for v in base:
        vecs.append(v)
        vecs.append(tuple(-x for x in v))
    return VectorConfiguration(r, tuple(vecs))


def lifted(d: int) -> PointConfiguration:
    """``{0, 2e_1, ..., 2e_d, e_1 + e_{d+1}, e_1 - e_{d+1}, ..., e_d - e_{d+1}}`` in R^(d+1)."""
    if d < 1:
        raise ValueError("lifted needs d >= 1")
    D = d + 1
    pts = [(0,) * D]
    pts += [tuple(2 * x for x in _unit(i, D)) for i in range(d)]
    top = _unit(d, D)
    for i in range(d):
        e = _unit(i, D)
        pts.append(tuple(a + b for a, b in zip(e, top)))
        pts.append(tuple(a - b for a, b in zip(e, top)))
    return PointConfiguration.from_points(pts)


def _fraction_in_unit(rng: random.Random, taken=()) -> Fraction:
    while True:
        q = rng.randint(2, 7)
        t = Fraction(rng.randint(1, q - 1), q)
        if t not in taken:
            return t


def _on_segment(u, w, t):
    return tuple(a + t * (b - a) for a, b in zip(u, w))


def prism(d: int, extra: int = 0, seed=0, frustum: bool = False) -> PointConfiguration:
    """Prism over a (d-1)-simplex with ``extra`` points on its vertical edges.

    Labels ``0..d-1`` are the bottom facet, ``d..2d-1`` the top facet (label
    ``i + d`` sits above ``i``), then the edge points.  With ``frustum`` the
    top facet is shrunk, which keeps the combinatorics.
    """
    if d < 2 or extra < 0:
        raise ValueError("prism needs d >= 2 and extra >= 0")
    rng = _rng(seed)
    simplex = [(0,) * (d - 1)] + [_unit(i, d - 1) for i in range(d - 1)]
    bottom = [tuple(Fraction(x) for x in s) + (Fraction(0),) for s in simplex]
    if frustum:
        c = Fraction(1, d)
        s = Fraction(rng.randint(1, 3), 4)
        top = [tuple(c + s * (x - c) for x in p[:-1]) + (Fraction(1),) for p in bottom]
    else:
        top = [p[:-1] + (Fraction(1),) for p in bottom]
    pts = bottom + top
    used: dict[int, set] = {}
    for _ in range(extra):
        i = rng.randrange(d)
        t = _fraction_in_unit(rng, used.setdefault(i, set()))
        used[i].add(t)
        pts.append(_on_segment(bottom[i], top[i], t))
    return PointConfiguration.from_points(pts)


def edge_simplex(d: int, extra: int = 1, seed=0) -> PointConfiguration:
    """d-simplex ``{0, e_1, ..., e_d}`` with ``extra`` points on edges at the origin."""
    if d < 1 or extra < 0:
        raise ValueError("edge-simplex needs d >= 1 and extra >= 0")
    rng = _rng(seed)
    pts = [(Fraction(0),) * d] + [tuple(Fraction(x) for x in _unit(i, d)) for i in range(d)]
    used: dict[int, set] = {}
    for _ in range(extra):
        i = rng.randrange(d)
        t = _fraction_in_unit(rng, used.setdefault(i, set()))
        used[i].add(t)
        pts.append(tuple(t * x for x in pts[i + 1]))
    return PointConfiguration.from_points(pts)


def polygon(k: int, extra: int = 0, seed=0) -> PointConfiguration:
    """Convex k-gon (vertices on a parabola) with ``extra`` points on its edges."""
    if k < 3 or extra < 0:
        raise ValueError("polygon needs k >= 3 and extra >= 0")
    rng = _rng(seed)
    xs = sorted(rng.sample(range(-6, 7), k))
    verts = [(Fraction(x), Fraction(x * x)) for x in xs]
    pts = list(verts)
    used: dict[int, set] = {}
    for _ in range(extra):
        i = rng.randrange(k)
        t = _fraction_in_unit(rng, used.setdefault(i, set()))
        used[i].add(t)
        pts.append(_on_segment(verts[i], verts[(i + 1) % k], t))
    return PointConfiguration.from_points(pts)


def add_apex(A: PointConfiguration, seed=0) -> PointConfiguration:
    """Pyramid over A: embed A at height 0 and add one point at height 1."""
    rng = _rng(seed)
    pts = [tuple(p) + (Fraction(0),) for p in A.points]
    pts.append(tuple(Fraction(rng.randint(-2, 2)) for _ in range(A.dim)) + (Fraction(1),))
    return PointConfiguration.from_points(pts)


def random_unimodular(d: int, seed=0) -> list[list[int]]:
    """Random integer matrix with determinant +-1 (product of elementary moves)."""
    rng = _rng(seed)
    M = [list(_unit(i, d)) for i in range(d)]
    if d < 2:
        return [[rng.choice((-1, 1))]] if d else []
    for _ in range(2 * d):
        i, j = rng.sample(range(d), 2)
        f = rng.choice((-1, 1))
        M[i] = [a + f * b for a, b in zip(M[i], M[j])]
    return M


def affine_image(A: PointConfiguration, seed=0) -> PointConfiguration:
    """A under a random unimodular linear map plus a small integer shift."""
    rng = _rng(seed)
    M = random_unimodular(A.dim, rng)
    shift = [rng.randint(-2, 2) for _ in range(A.dim)]
    pts = [tuple(sum(M[i][k] * p[k] for k in range(A.dim)) + shift[i] for i in range(A.dim))
           for p in A.points]
    return PointConfiguration(A.dim, tuple(pts), A.labels)


def random_points(n: int, d: int, seed=0, lo: int = -3, hi: int = 3,
                  distinct: bool = True) -> PointConfiguration:
    """n random integer points spanning R^d (rejection sampling).

    For distinct points the coordinate box is widened when it has too few
    cells.
    """
    if n < d + 1:
        raise ValueError(f"{n} points cannot span dimension {d}")
    rng = _rng(seed)
    while distinct and (hi - lo + 1) ** d < 2 * n:
        lo, hi = lo - 1, hi + 1
    for _ in range(10000):
        if distinct:
            cells = set()
            while len(cells) < n:
                cells.add(tuple(rng.randint(lo, hi) for _ in range(d)))
            pts = sorted(cells)
            rng.shuffle(pts)
        else:
            pts = [tuple(rng.randint(lo, hi) for _ in range(d)) for _ in range(n)]
        try:
            return PointConfiguration(d, tuple(pts))
        except ConfigurationError:
            continue
    raise RuntimeError("could not sample a full-dimensional configuration")


def random_vectors(n: int, r: int, seed=0, lo: int = -2, hi: int = 2,
                   totally_cyclic: bool = False, irreducible: bool = True) -> VectorConfiguration:
    """n random integer vectors spanning R^r.

    With ``totally_cyclic`` a few rejection rounds are tried; after that the
    last vector is replaced by minus the sum of the others.
    """
    rng = _rng(seed)
    for attempt in range(10000):
        vecs = []
        while len(vecs) < n:
            v = tuple(rng.randint(lo, hi) for _ in range(r))
            if any(v) or not irreducible:
                vecs.append(v)
        if totally_cyclic and attempt >= 5:
            s = tuple(-sum(v[k] for v in vecs[:-1]) for k in range(r))
            if irreducible and not any(s):
                continue
            vecs[-1] = s
        if r and rank(QMatrix.from_columns(vecs, r)) != r:
            continue
        V = VectorConfiguration(r, tuple(vecs))
        if totally_cyclic and not is_totally_cyclic(V):
            continue
        return V
    raise RuntimeError("could not sample a vector configuration")


def from_name(name: str, params: list[int], seed=0):
    """Dispatch used by the command line ``gen`` command."""
    def need(k, lo=None):
        if lo is not None and len(params) < lo:
            raise ValueError(f"{name} takes {k} parameter(s)")
        if lo is None and len(params) != k:
            raise ValueError(f"{name} takes {k} parameter(s)")

    if name == "pentagon":
        need(0)
        return pentagon()
    if name == "pentagon-join":
        need(1)
        return pentagon_join(params[0])
    if name == "lawrence":
        need(2)
        return lawrence(params[0], params[1], seed)
    if name == "lifted":
        need(1)
        return lifted(params[0])
    if name == "prism":
        if len(params) not in (1, 2):
            raise ValueError("prism takes d [extra]")
        return prism(params[0], params[1] if len(params) > 1 else 0, seed)
    if name == "edge-simplex":
        if len(params) not in (1, 2):
            raise ValueError("edge-simplex takes d [extra]")
        return edge_simplex(params[0], params[1] if len(params) > 1 else 1, seed)
    if name == "random":
        if len(params) not in (2, 3):
            raise ValueError("random takes n d [seed]")
        s = params[2] if len(params) > 2 else seed
        return random_points(params[0], params[1], s)
    raise ValueError(f"unknown generator {name!r}")


GENERATOR_NAMES = ("pentagon", "pentagon-join", "lawrence", "lifted", "prism",
                   "edge-simplex", "random")


__all__ = [
    "PENTAGON", "pentagon", "pentagon_join", "lawrence", "lifted", "prism",
    "edge_simplex", "polygon", "add_apex", "affine_image", "random_unimodular",
    "random_points", "random_vectors", "from_name", "GENERATOR_NAMES",
]
