"""Acceptance criteria 1-8, one pass/fail line each (see the summary section of the run)."""

import random
import time

from conftest import ACCEPTANCE_LINES

from galedeg import generators as gen
from galedeg.checks import (
    DEGREE_ONE_CASES,
    Sizes,
    degree_one_instance,
    suite_cayley_bound,
    suite_core_tverberg,
    suite_deg1,
    suite_lawrence,
    suite_primal_dual,
    suite_pyramid_bound,
    suite_section_quotient,
)
from galedeg.circuits import check_small_circuits_deg1, max_combinatorial_cayley, max_weak_cayley
from galedeg.cli import main
from galedeg.config import gale_dual, is_pure, pure_reduction
from galedeg.degree import degree_primal, dual_degree

SEED = 0


def report(n, ok, elapsed, limit, detail):
    status = "PASS" if ok and elapsed < limit else "FAIL"
    ACCEPTANCE_LINES[n] = f"criterion {n}: {status} ({elapsed:.1f}s, limit {limit}s) {detail}"
    print(ACCEPTANCE_LINES[n])
    return status == "PASS"


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_1_worked_examples():
    facts = {}
    slowest = 0.0

    def pentagon():
        A = gen.pentagon()
        V = gale_dual(A)
        return degree_primal(A).degree, dual_degree(V).degree, max_weak_cayley(V).length

    def join():
        A = gen.pentagon_join(2)
        delta = degree_primal(A).degree
        return A.n, A.dim, delta, max_weak_cayley(gale_dual(A)).length

    def a7():
        A = gen.lifted(2)
        V = gale_dual(A)
        C = max_combinatorial_cayley(V)
        return degree_primal(A).degree, max_weak_cayley(V).length, C.length if C else 0

    def lawrence():
        V = gen.lawrence(2, 4)
        return dual_degree(V).degree, V.n // 2 - V.rank

    for name, fn in [("pentagon", pentagon), ("join", join), ("a7", a7), ("lawrence", lawrence)]:
        facts[name], dt = timed(fn)
        slowest = max(slowest, dt)

    n, d, delta, L = facts["join"]
    expected = {
        "pentagon": (1, 1, 1),
        "join": (10, 5, 2, d + 1 - 2 * delta),
        "a7": (2, 2, 1),
        "lawrence": (0, 0),
    }
    wrong = [k for k in expected if facts[k] != expected[k]]
    detail = "all examples reproduced" if not wrong else \
        "mismatch: " + ", ".join(f"{k} got {facts[k]} expected {expected[k]}" for k in wrong)
    assert report(1, not wrong, slowest, 5, detail), detail


def test_2_primal_dual():
    res, dt = timed(lambda: suite_primal_dual(1000, SEED, Sizes(9, 4)))
    assert report(2, res.ok, dt, 120, f"{res.passed}/{res.total} instances agree"), res.report()


def test_3_main_bound():
    res, dt = timed(lambda: suite_cayley_bound(500, SEED, Sizes(12, 5)))
    assert report(3, res.ok, dt, 300, f"{res.passed}/{res.total} totally cyclic instances"), res.report()


def test_4_degree_one_classification():
    # 5 slots per round: the four theorem cases, then one degree >= 2 instance
    res, dt = timed(lambda: suite_deg1(200 * (len(DEGREE_ONE_CASES) + 1), SEED, Sizes(10, 5)))
    assert report(4, res.ok, dt, 300, f"{res.passed}/{res.total} (200 per case + 200 with degree >= 2)"), \
        res.report()


def test_5_core_tverberg():
    res, dt = timed(lambda: suite_core_tverberg(1000, SEED, Sizes(12, 4)))
    eq = res.notes[0] == "equality instance: depth 2, order 2, bound 2"
    assert report(5, res.ok and eq and res.total == 1001, dt, 300,
                  f"{res.passed}/{res.total}; {res.notes[0]}"), res.report()


def test_6_structural_corollaries():
    t0 = time.perf_counter()
    pyr = suite_pyramid_bound(500, SEED, Sizes(9, 4))
    sq = suite_section_quotient(500, SEED, Sizes(10, 4))
    law = suite_lawrence(250, SEED, Sizes(10, 4))  # every fifth instance is a constructed Lawrence dual
    rng = random.Random(f"deg0:{SEED}")
    deg0_bad = 0
    for i in range(500):
        d = rng.randint(1, 4)
        n = rng.randint(d + 1, 9)
        A = gen.random_points(n, d, rng)
        deg0_bad += (degree_primal(A).degree == 0) != (A.n == A.dim + 1)
    # a few guaranteed simplices as well
    for d in range(1, 5):
        deg0_bad += degree_primal(gen.edge_simplex(d, 0)).degree != 0
    dt = time.perf_counter() - t0
    ok = pyr.ok and sq.ok and law.ok and not deg0_bad
    detail = (f"pyramid {pyr.passed}/{pyr.total}, section-quotient {sq.passed}/{sq.total}, "
              f"lawrence {law.passed}/{law.total}, degree-0 mismatches {deg0_bad}")
    assert report(6, ok, dt, 300, detail), "\n".join(r.report() for r in (pyr, sq, law))


def test_7_small_circuits():
    def run():
        rng = random.Random(f"small-circuits:{SEED}")
        checked = bad = 0
        while checked < 100:
            case = DEGREE_ONE_CASES[checked % len(DEGREE_ONE_CASES)]
            A, _, _ = degree_one_instance(case, rng, 5)
            V = gale_dual(A)
            if not is_pure(V):
                _, V = pure_reduction(V)
            if V.rank == 0 or dual_degree(V).degree != 1:
                continue
            ok, _ = check_small_circuits_deg1(V)
            checked += 1
            bad += not ok
        return checked, bad

    (checked, bad), dt = timed(run)
    assert report(7, not bad, dt, 120, f"{checked - bad}/{checked} pure degree-1 duals"), bad


def test_8_determinism():
    import io

    def once():
        out = io.StringIO()
        rc = main(["check", "all", "--seed", "3"], out=out)
        return rc, out.getvalue()

    (a, b), dt = timed(lambda: (once(), once()))
    ok = a == b and a[0] == 0
    assert report(8, ok, dt, 300, "two full check runs byte-identical" if a == b else "outputs differ"), \
        (a, b)
