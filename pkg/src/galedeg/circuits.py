"""Signed circuits of a vector configuration and Cayley decompositions.

Circuits are found as minimal dependent sets: a depth-first walk over the
independent sets in increasing label order, testing each new vector against
an incrementally reduced integer basis.  Every circuit is reported exactly
once, from the independent set obtained by dropping its largest element.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from math import gcd
from typing import Iterable

from .config import (
    PointConfiguration,
    VectorConfiguration,
    gale_dual,
    homogenize,
    is_pure,
)
from .exactnum import Position, find_point, integer_scale, origin_position, rank, QMatrix
from .setsys import bits, mask_of, max_packing, min_hitting_set_size


@dataclass(frozen=True)
class SignedSet:
    """A signed subset of labels, oriented so its smallest label is positive."""

    pos: frozenset
    neg: frozenset

    def __post_init__(self):
        pos, neg = frozenset(self.pos), frozenset(self.neg)
        object.__setattr__(self, "pos", pos)
        object.__setattr__(self, "neg", neg)
        if pos & neg:
            raise ValueError("positive and negative parts overlap")
        if not pos | neg:
            raise ValueError("empty signed set")
        if min(pos | neg) not in pos:
            raise ValueError("smallest label must be positive (canonical orientation)")

    @classmethod
    def oriented(cls, pos: Iterable[int], neg: Iterable[int]) -> SignedSet:
        pos, neg = frozenset(pos), frozenset(neg)
        if min(pos | neg) in neg:
            pos, neg = neg, pos
        return cls(pos, neg)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self.pos | self.neg))

    @property
    def is_positive(self) -> bool:
        return not self.neg

    def __len__(self):
        return len(self.pos) + len(self.neg)

    def sort_key(self):
        return self.support, tuple(sorted(self.pos))

    def __repr__(self):
        return f"SignedSet(pos={sorted(self.pos)}, neg={sorted(self.neg)})"


def _reduce(vec, idx, basis):
    x = list(vec)
    combo = {idx: 1}
    for p, R, E in basis:
        f = x[p]
        if not f:
            continue
        a = R[p]
        g = gcd(a, f)
        a //= g
        f //= g
        x = [a * u - f * w for u, w in zip(x, R)]
        combo = {k: a * v for k, v in combo.items()}
        for k, v in E.items():
            combo[k] = combo.get(k, 0) - f * v
        c = reduce(gcd, x, 0)
        c = reduce(gcd, combo.values(), c)
        if c > 1:
            x = [u // c for u in x]
            combo = {k: v // c for k, v in combo.items()}
    return x, combo


def circuit_dependences(vectors) -> list[dict[int, int]]:
    """Integer dependences (position -> coefficient) supported on the circuits."""
    ints = [integer_scale(v) for v in vectors]
    n = len(ints)
    out: list[dict[int, int]] = []

    def walk(start, basis, members):
        for e in range(start, n):
            x, combo = _reduce(ints[e], e, basis)
            if any(x):
                p = next(i for i, u in enumerate(x) if u)
                walk(e + 1, basis + [(p, x, combo)], members + [e])
            elif all(combo.get(i, 0) for i in members):
                out.append({k: v for k, v in combo.items() if v})

    walk(0, [], [])
    return out


@lru_cache(maxsize=512)
def _circuits_cached(V: VectorConfiguration) -> tuple:
    found = []
    for dep in circuit_dependences(V.vectors):
        pos = [V.labels[i] for i, v in dep.items() if v > 0]
        neg = [V.labels[i] for i, v in dep.items() if v < 0]
        found.append(SignedSet.oriented(pos, neg))
    return tuple(sorted(found, key=SignedSet.sort_key))


def circuits(V: VectorConfiguration) -> list[SignedSet]:
    """All circuits of the oriented matroid of V, canonically oriented and sorted."""
    return list(_circuits_cached(V))


def positive_circuits(V: VectorConfiguration) -> list[tuple[int, ...]]:
    return [c.support for c in _circuits_cached(V) if c.is_positive]


def _label_bits(V: VectorConfiguration):
    order = sorted(V.labels)
    return order, {l: i for i, l in enumerate(order)}


def positive_circuit_masks(V: VectorConfiguration) -> tuple[list[int], list[int]]:
    """Positive circuits as bitmasks over the sorted labels, plus that label order."""
    order, at = _label_bits(V)
    return [mask_of(at[l] for l in c) for c in positive_circuits(V)], order


# ---------------------------------------------------------------------------
# Cayley decompositions

@dataclass(frozen=True)
class WeakCayleyDecomposition:
    """Pairwise disjoint positive circuits (factors) and the leftover labels."""

    factors: tuple
    residual: tuple

    @property
    def length(self) -> int:
        return len(self.factors)

    def verify(self, V: VectorConfiguration) -> bool:
        seen: set[int] = set()
        for f in self.factors:
            if not f or seen & set(f):
                return False
            seen |= set(f)
            if not is_positive_circuit(V, f):
                return False
        return tuple(sorted(set(V.labels) - seen)) == tuple(self.residual)


@dataclass(frozen=True)
class CombinatorialCayleyDecomposition:
    parts: tuple

    @property
    def length(self) -> int:
        return len(self.parts)

    def verify(self, V: VectorConfiguration) -> bool:
        flat = [l for p in self.parts for l in p]
        if sorted(flat) != sorted(V.labels) or any(not p for p in self.parts):
            return False
        return all(
            origin_position([V.vector(l) for l in p]).position is Position.IN_RELINT
            for p in self.parts)


def is_positive_circuit(V: VectorConfiguration, labels) -> bool:
    """0 in the relative interior of conv(labels) and the labels are minimally dependent."""
    vecs = [V.vector(l) for l in labels]
    if origin_position(vecs).position is not Position.IN_RELINT:
        return False
    r = rank(QMatrix.from_columns(vecs, V.rank)) if V.rank else 0
    return r == len(vecs) - 1


def max_weak_cayley(V: VectorConfiguration) -> WeakCayleyDecomposition:
    """Maximum family of disjoint positive circuits.

    Exact set packing; the minimum hitting set of the positive circuits (the
    dual codegree) caps the search.  Ties go to the lexicographically
    smallest sorted factor list.
    """
    masks, order = positive_circuit_masks(V)
    cap = min_hitting_set_size(masks) if masks else 0
    packing = max_packing(masks, upper=cap)
    factors = tuple(tuple(order[i] for i in bits(m)) for m in packing)
    used = {l for f in factors for l in f}
    residual = tuple(l for l in order if l not in used)
    return WeakCayleyDecomposition(factors, residual)


def _positive_parts(pc_masks: list[int], n: int) -> list[int]:
    """For each mask, the union of positive circuits inside it."""
    pcs = set(pc_masks)
    part = [0] * (1 << n)
    for m in range(1, 1 << n):
        if m in pcs:
            part[m] = m
            continue
        acc = 0
        x = m
        while x:
            low = x & -x
            acc |= part[m ^ low]
            x ^= low
        part[m] = acc
    return part


def max_combinatorial_cayley(V: VectorConfiguration) -> CombinatorialCayleyDecomposition | None:
    """Longest partition of all of V into positive vectors, or None if there is none.

    A set is a positive vector exactly when it is a union of positive
    circuits, and a positive vector minus a positive vector part is again
    one; the search memoizes on the remaining set.
    """
    masks, order = positive_circuit_masks(V)
    n = len(order)
    if n == 0:
        return None
    full = (1 << n) - 1
    part = _positive_parts(masks, n)
    if part[full] != full:
        return None
    memo: dict[int, tuple[int, int]] = {0: (0, 0)}

    def best(R: int) -> int:
        if R in memo:
            return memo[R][0]
        low = R & -R
        rest = R ^ low
        top, pick = -1, 0
        s = rest
        while True:
            P = s | low
            Q = R ^ P
            if part[P] == P and (Q == 0 or part[Q] == Q):
                val = 1 + best(Q)
                if val > top or (val == top and P < pick):
                    top, pick = val, P
            if s == 0:
                break
            s = (s - 1) & rest
        memo[R] = (top, pick)
        return top

    best(full)
    parts = []
    R = full
    while R:
        P = memo[R][1]
        parts.append(tuple(order[i] for i in bits(P)))
        R ^= P
    return CombinatorialCayleyDecomposition(tuple(sorted(parts)))


@dataclass(frozen=True)
class PrimalCayleyCheck:
    """Outcome of checking a weak Cayley decomposition on the primal side.

    ``witnesses[i]`` is ``(c, c0)`` with ``<c, a> = c0`` exactly on the
    points outside factor ``i`` and ``<c, a> > c0`` on the factor, or
    ``None`` when no such face exists.
    """

    ok: bool
    witnesses: tuple
    gale_ok: bool


def face_functional(A: PointConfiguration, on_labels) -> tuple | None:
    """``(c, c0)`` exposing a face of conv(A) whose points are exactly ``on_labels``."""
    on = set(on_labels)
    H = homogenize(A.points)
    # unknowns (c, -c0); equality on the face, >= 1 elsewhere
    eq = [H[i] for i, l in enumerate(A.labels) if l in on]
    ge = [H[i] for i, l in enumerate(A.labels) if l not in on]
    sol = find_point(A.dim + 1, eq, [0] * len(eq), ge, [1] * len(ge))
    if sol is None:
        return None
    sol = integer_scale(sol)
    return sol[:-1], -sol[-1]


def verify_weak_cayley_primal(A: PointConfiguration, D: WeakCayleyDecomposition) -> PrimalCayleyCheck:
    labels = set(A.labels)
    seen: set[int] = set()
    structural = True
    for f in D.factors:
        if not f or seen & set(f) or not set(f) <= labels:
            structural = False
        seen |= set(f)
    if tuple(sorted(labels - seen)) != tuple(sorted(D.residual)):
        structural = False
    witnesses = tuple(face_functional(A, labels - set(f)) for f in D.factors)
    V = gale_dual(A)
    gale_ok = all(
        origin_position([V.vector(l) for l in f]).position is Position.IN_RELINT
        for f in D.factors)
    ok = structural and all(w is not None for w in witnesses)
    return PrimalCayleyCheck(ok, witnesses, gale_ok)


# ---------------------------------------------------------------------------
# Lawrence configurations and small circuits

def _negative_multiple(u, v) -> bool:
    """True when ``v = -lam * u`` for some ``lam > 0`` (or both are zero)."""
    if not any(u) or not any(v):
        return not any(u) and not any(v)
    ratio = None
    for a, b in zip(u, v):
        if a == 0 and b == 0:
            continue
        if a == 0 or b == 0:
            return False
        t = b / a
        if ratio is None:
            ratio = t
        elif t != ratio:
            return False
    return ratio < 0


def is_lawrence(V: VectorConfiguration) -> list[tuple[int, int]] | None:
    """Perfect matching ``i <-> j`` with ``v_j = -lam v_i``, lam > 0, if V is centrally symmetric.

    Lowest unmatched label is paired with the lowest admissible partner.
    """
    order = sorted(V.labels)
    free = list(order)
    pairs = []
    while free:
        i = free.pop(0)
        vi = V.vector(i)
        j = next((j for j in free if _negative_multiple(vi, V.vector(j))), None)
        if j is None:
            return None
        free.remove(j)
        pairs.append((i, j))
    return pairs


def check_small_circuits_deg1(V: VectorConfiguration) -> tuple[bool, SignedSet | None]:
    """Every mixed-sign circuit of a pure dual-degree-1 configuration has size r + 1.

    Returns ``(True, None)`` or ``(False, offending circuit)``.
    """
    from .degree import dual_degree

    if not is_pure(V):
        raise ValueError("configuration is not pure")
    delta = dual_degree(V).degree
    if delta != 1:
        raise ValueError(f"dual degree is {delta}, expected 1")
    for c in circuits(V):
        if c.pos and c.neg and len(c) != V.rank + 1:
            return False, c
    return True, None
