"""Exact minimum hitting set and maximum set packing over bitmask families.

Sets are Python ints used as bitmasks over positions ``0..n-1``.  Both
searches return the lexicographically smallest optimum (sorted tuples of
positions, compared as tuples), so results are reproducible.
"""

from __future__ import annotations

from typing import Sequence


def bits(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_of(positions) -> int:
    m = 0
    for p in positions:
        m |= 1 << p
    return m


def _popcount(m: int) -> int:
    return bin(m).count("1")


def _disjoint_lower_bound(sets: list[int]) -> int:
    """Size of a greedy packing: a lower bound for any hitting set."""
    used = 0
    count = 0
    for s in sorted(sets, key=_popcount):
        if not s & used:
            used |= s
            count += 1
    return count


def _greedy_hitting(sets: list[int]) -> int:
    """Size of a greedy hitting set: an upper bound for any packing."""
    sets = [s for s in sets]
    count = 0
    while sets:
        tally: dict[int, int] = {}
        for s in sets:
            m = s
            while m:
                low = m & -m
                tally[low] = tally.get(low, 0) + 1
                m ^= low
        best = max(tally, key=lambda b: (tally[b], -b))
        sets = [s for s in sets if not s & best]
        count += 1
    return count


def min_hitting_set_size(sets: Sequence[int]) -> int:
    """Size of a minimum set of positions meeting every set in ``sets``."""
    sets = list(set(sets))
    if any(s == 0 for s in sets):
        raise ValueError("the empty set cannot be hit")
    if not sets:
        return 0
    best = [_greedy_hitting(sets)]

    def rec(active: list[int], chosen: int, forbidden: int):
        if not active:
            best[0] = min(best[0], chosen)
            return
        allowed = [s & ~forbidden for s in active]
        if not all(allowed):
            return
        if chosen + _disjoint_lower_bound(allowed) >= best[0]:
            return
        # branch on the set with fewest usable elements; later branches may
        # not reuse elements already tried
        cand = min(allowed, key=lambda s: (_popcount(s), s))
        tried = 0
        while cand:
            low = cand & -cand
            cand ^= low
            rec([s for s in active if not s & low], chosen + 1, forbidden | tried)
            tried |= low

    rec(sets, 0, 0)
    return best[0]


def min_hitting_set(sets: Sequence[int], n: int) -> tuple[int, ...]:
    """Lexicographically smallest minimum hitting set, as sorted positions."""
    sets = sorted(set(sets))
    k = min_hitting_set_size(sets)
    if k == 0:
        return ()
    full = (1 << n) - 1

    def rec(pos: int, chosen: tuple, active: list[int], budget: int):
        if not active:
            return chosen
        if budget == 0 or pos >= n:
            return None
        allowed = full & ~((1 << pos) - 1)
        if any(not s & allowed for s in active):
            return None
        if _disjoint_lower_bound([s & allowed for s in active]) > budget:
            return None
        bit = 1 << pos
        if any(s & bit for s in active):
            got = rec(pos + 1, chosen + (pos,), [s for s in active if not s & bit], budget - 1)
            if got is not None:
                return got
        return rec(pos + 1, chosen, active, budget)

    out = rec(0, (), sets, k)
    assert out is not None and len(out) == k
    return out


def max_packing_size(sets: Sequence[int], upper: int | None = None) -> int:
    """Largest number of pairwise disjoint members of ``sets``.

    ``upper`` is an optional known upper bound (e.g. a hitting set size) that
    lets the search stop as soon as it is reached.
    """
    sets = sorted(set(s for s in sets if s))
    if not sets:
        return 0
    best = [0]
    cap = upper if upper is not None else _greedy_hitting(sets)

    def rec(avail_sets: list[int], count: int):
        if count > best[0]:
            best[0] = count
        if best[0] >= cap or not avail_sets:
            return
        if count + _greedy_hitting(avail_sets) <= best[0]:
            return
        # branch on the lowest element still coverable
        union = 0
        for s in avail_sets:
            union |= s
        low = union & -union
        for s in avail_sets:
            if s & low:
                rec([t for t in avail_sets if not t & s], count + 1)
                if best[0] >= cap:
                    return
        rec([t for t in avail_sets if not t & low], count)

    rec(sets, 0)
    return best[0]


def max_packing(sets: Sequence[int], upper: int | None = None) -> list[int]:
    """Lexicographically smallest maximum packing.

    Members are compared as sorted position tuples; the returned list is
    sorted the same way.
    """
    uniq = sorted(set(s for s in sets if s), key=bits)
    m = max_packing_size(uniq, upper)
    if m == 0:
        return []

    def rec(i: int, used: int, chosen: list[int]):
        if len(chosen) == m:
            return list(chosen)
        rest = [j for j in range(i, len(uniq)) if not uniq[j] & used]
        if len(chosen) + len(rest) < m:
            return None
        if len(chosen) + _greedy_hitting([uniq[j] for j in rest]) < m:
            return None
        for j in rest:
            chosen.append(j)
            got = rec(j + 1, used | uniq[j], chosen)
            chosen.pop()
            if got is not None:
                return got
        return None

    idx = rec(0, 0, [])
    assert idx is not None
    return [uniq[j] for j in idx]
