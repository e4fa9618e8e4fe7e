"""Randomized theorem checks behind ``galedeg check``.

Every suite draws its instances from a ``random.Random`` seeded with the
suite name and the user seed, so reports are byte-for-byte reproducible.
The functions doing the actual mathematics are looked up on an
:class:`Oracles` object; tests swap in a broken one to make sure a wrong
answer really turns into a failure.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import circuits, classify, config, degree, depth, generators as gen
from .classify import Kind
from .config import PointConfiguration, VectorConfiguration
from .exactnum import QMatrix, rank
from .fileio import format_config, format_rational


@dataclass
class Oracles:
    degree_primal: Callable = degree.degree_primal
    dual_degree: Callable = degree.dual_degree
    degree_oracle: Callable = degree.degree_oracle
    max_weak_cayley: Callable = circuits.max_weak_cayley
    classify_low_degree: Callable = classify.classify_low_degree
    verify_classification: Callable = classify.verify_classification
    check_core_tverberg: Callable = depth.check_core_tverberg
    halfspace_depth: Callable = depth.halfspace_depth
    tverberg_order: Callable = depth.tverberg_order
    is_lawrence: Callable = circuits.is_lawrence
    is_pyramid: Callable = config.is_pyramid
    section_quotient_degrees: Callable = degree.section_quotient_degrees
    check_small_circuits_deg1: Callable = circuits.check_small_circuits_deg1


@dataclass
class SuiteResult:
    name: str
    total: int = 0
    passed: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    # the conjecture suite only reports
    informational: bool = False

    @property
    def ok(self) -> bool:
        return self.informational or not self.failures

    def record(self, ok: bool, trial: int, message: str, instance=None):
        self.total += 1
        if ok:
            self.passed += 1
        else:
            self.failures.append((trial, message, instance))

    def report(self) -> str:
        status = "ok" if self.ok else "FAILED"
        lines = [f"suite {self.name}: {self.passed}/{self.total} passed [{status}]"]
        lines += [f"  note: {n}" for n in self.notes]
        for trial, msg, inst in self.failures:
            label = "finding" if self.informational else "failure"
            lines.append(f"  {label} (trial {trial}): {msg}")
            if inst is not None:
                lines += ["    " + row for row in _serialize(inst).splitlines()]
        return "\n".join(lines)


def _serialize(inst) -> str:
    if isinstance(inst, tuple):
        C, x = inst
        return format_config(C) + "point " + " ".join(format_rational(c) for c in x) + "\n"
    return format_config(inst)


@dataclass(frozen=True)
class Sizes:
    n: int
    d: int

    @classmethod
    def parse(cls, text: str) -> Sizes:
        try:
            n, d = (int(t) for t in text.split(","))
        except ValueError:
            raise ValueError(f"--sizes expects 'N,D', got {text!r}") from None
        if n < 1 or d < 1:
            raise ValueError("--sizes values must be positive")
        return cls(n, d)


def suite_rng(name: str, seed: int) -> random.Random:
    return random.Random(f"{name}:{seed}")


# ---------------------------------------------------------------------------
# instance makers

def random_point_config(rng, n_max, d_max, distinct=True, d_min=1) -> PointConfiguration:
    d = rng.randint(d_min, d_max)
    n = rng.randint(d + 1, max(d + 1, n_max))
    return gen.random_points(n, d, rng, distinct=distinct)


def generator_instances() -> list[PointConfiguration]:
    return [
        gen.pentagon(), gen.pentagon_join(1), gen.pentagon_join(2),
        gen.lifted(1), gen.lifted(2), gen.lifted(3),
        gen.prism(3), gen.prism(3, 2, 1), gen.prism(4, 3, 2),
        gen.edge_simplex(3, 2), gen.edge_simplex(4, 3, 1),
        gen.polygon(5, 2), gen.random_points(8, 3, 0),
    ]


def stack(A: PointConfiguration, k: int, rng) -> PointConfiguration:
    for _ in range(k):
        A = gen.add_apex(A, rng)
    return A


def degree_one_instance(case: str, rng, d_max: int = 5):
    """(configuration, expected outer kind, expected base kind) for one theorem case."""
    d_max = max(d_max, 3)
    if case == "prism":
        d = rng.randint(3, d_max)
        A = gen.prism(d, rng.randint(0, 3), rng, frustum=rng.random() < 0.5)
        kind = Kind.PRISM_OVER_SIMPLEX_EDGE_POINTS
        k = rng.randint(0, 1) if d < d_max else 0
        A = stack(A, k, rng)
        outer = Kind.PYRAMID if k else kind
    elif case == "edge-simplex":
        d = rng.randint(3, d_max)
        A = gen.edge_simplex(d, rng.randint(1, 4), rng)
        kind = outer = Kind.SIMPLEX_EDGE_POINTS_AT_VERTEX
        # a pyramid over such a simplex is again one
        A = stack(A, rng.randint(0, 1) if d < d_max else 0, rng)
    elif case == "polygon":
        k = rng.randint(3, 6)
        A = gen.polygon(k, rng.randint(0 if k > 3 else 1, 3), rng)
        kind = outer = Kind.POLYGON_NO_INTERIOR
    elif case == "polygon-pyramid":
        A = gen.polygon(rng.randint(4, 6), rng.randint(0, 2), rng)
        A = stack(A, rng.randint(1, d_max - 2), rng)
        kind, outer = Kind.POLYGON_NO_INTERIOR, Kind.PYRAMID
    else:
        raise ValueError(case)
    return gen.affine_image(A, rng), outer, kind


DEGREE_ONE_CASES = ("prism", "edge-simplex", "polygon", "polygon-pyramid")


def high_degree_instance(rng, n_max: int = 10, d_max: int = 4) -> PointConfiguration:
    """Random configuration of degree >= 2 (rejection sampling)."""
    while True:
        d = rng.randint(2, max(2, d_max))
        n = rng.randint(d + 3, max(d + 3, n_max))
        A = gen.random_points(n, d, rng)
        if degree.degree_primal(A).degree >= 2:
            return A


def closed_subset(V: VectorConfiguration, seed_labels) -> list[int]:
    """All labels whose vectors lie in the span of ``seed_labels``."""
    span = [V.vector(l) for l in seed_labels]
    base = rank(QMatrix.from_columns(span, V.rank))
    return [l for l in V.labels
            if l in seed_labels or rank(QMatrix.from_columns(span + [V.vector(l)], V.rank)) == base]


# ---------------------------------------------------------------------------
# suites

def suite_primal_dual(trials, seed, sizes=Sizes(9, 4), oracles=None) -> SuiteResult:
    O = oracles or Oracles()
    res = SuiteResult("primal-dual")
    rng = suite_rng(res.name, seed)
    instances = generator_instances()
    instances += [random_point_config(rng, sizes.n, sizes.d) for _ in range(trials)]
    for i, A in enumerate(instances):
        p = O.degree_primal(A)
        g = O.dual_degree(config.gale_dual(A))
        ok = (p.degree, p.codegree) == (g.degree, g.codegree)
        res.record(ok, i, f"primal (deg, codeg) = ({p.degree}, {p.codegree}), "
                          f"dual = ({g.degree}, {g.codegree})", A)
    return res


def suite_deg1(trials, seed, sizes=Sizes(10, 5), oracles=None) -> SuiteResult:
    O = oracles or Oracles()
    res = SuiteResult("deg1")
    rng = suite_rng(res.name, seed)
    for i in range(trials):
        slot = i % (len(DEGREE_ONE_CASES) + 1)
        if slot < len(DEGREE_ONE_CASES):
            A, outer, base = degree_one_instance(DEGREE_ONE_CASES[slot], rng, sizes.d)
            c = O.classify_low_degree(A)
            delta = O.degree_oracle(A)
            ok = c.kind is outer and c.case() is base and delta <= 1
            msg = f"expected {outer.name}/{base.name}, got {c.kind.name}/{c.case().name}, oracle degree {delta}"
            if ok and not O.verify_classification(A, c):
                ok, msg = False, "structural witness does not re-verify"
            # pyramids over polygons are exempt: over a pentagon the length is only 2
            if ok and A.dim >= 3 and base is not Kind.POLYGON_NO_INTERIOR:
                L = O.max_weak_cayley(config.gale_dual(A)).length
                if L < A.dim:
                    ok, msg = False, f"weak Cayley length {L} < d = {A.dim}"
        else:
            A = high_degree_instance(rng, sizes.n, min(sizes.d, 4))
            c = O.classify_low_degree(A)
            ok = c.kind is Kind.NOT_DEG_LE_1 and O.verify_classification(A, c)
            msg = f"degree >= 2 instance classified as {c.kind.name}"
        res.record(ok, i, msg, A)
    return res


def suite_cayley_bound(trials, seed, sizes=Sizes(12, 5), oracles=None) -> SuiteResult:
    O = oracles or Oracles()
    res = SuiteResult("cayley-bound")
    rng = suite_rng(res.name, seed)
    for i in range(trials):
        r = rng.randint(1, sizes.d)
        n = rng.randint(r + 1, max(r + 1, sizes.n))
        V = gen.random_vectors(n, r, rng, totally_cyclic=True)
        d = n - r - 1
        rep = O.dual_degree(V)
        L = O.max_weak_cayley(V).length
        ok = L >= d - 3 * rep.degree + 1 and rep.codegree >= L
        res.record(ok, i, f"d={d} delta={rep.degree} codeg={rep.codegree} weak length {L}", V)
    return res


def suite_core_tverberg(trials, seed, sizes=Sizes(12, 4), oracles=None) -> SuiteResult:
    O = oracles or Oracles()
    res = SuiteResult("core-tverberg")
    rng = suite_rng(res.name, seed)
    cases = [(PointConfiguration.from_points([(1, 0), (-1, 0), (0, 1), (0, -1)]), (0, 0))]
    for _ in range(trials):
        S = random_point_config(rng, sizes.n, sizes.d, distinct=False)
        if rng.random() < 0.7:
            k = rng.randint(1, S.n)
            idx = rng.sample(range(S.n), k)
            w = [rng.randint(1, 3) for _ in idx]
            x = tuple(sum(Fraction(wi) * S.points[j][c] for wi, j in zip(w, idx)) / sum(w)
                      for c in range(S.dim))
        else:
            x = tuple(Fraction(rng.randint(-3, 3)) for _ in range(S.dim))
        cases.append((S, x))
    for i, (S, x) in enumerate(cases):
        chk = O.check_core_tverberg(S, x)
        ok = chk.satisfied and chk.order <= chk.depth
        res.record(ok, i, f"depth {chk.depth}, order {chk.order}, bound {chk.bound}", (S, x))
        if i == 0:
            res.notes.append(f"equality instance: depth {chk.depth}, order {chk.order}, bound {chk.bound}")
    return res


def suite_lawrence(trials, seed, sizes=Sizes(10, 4), oracles=None) -> SuiteResult:
    O = oracles or Oracles()
    res = SuiteResult("lawrence")
    rng = suite_rng(res.name, seed)
    sym = 0
    for i in range(trials):
        if i % 5 == 4:
            r = rng.randint(1, sizes.d)
            m = rng.randint(r, max(r, sizes.n // 2))
            L = gen.lawrence(r, 2 * m, rng)
            vecs = [tuple(rng.randint(1, 3) * x for x in v) for v in L.vectors]
            order = list(range(len(vecs)))
            rng.shuffle(order)
            V = VectorConfiguration(r, tuple(vecs[j] for j in order))
        else:
            r = rng.randint(1, sizes.d)
            n = rng.randint(r + 1, max(r + 1, sizes.n))
            V = gen.random_vectors(n, r, rng)
        d = V.n - V.rank - 1
        delta = O.dual_degree(V).degree
        extremal = V.rank == d + 1 - 2 * delta
        symmetric = O.is_lawrence(V) is not None
        sym += symmetric
        ok = V.rank >= d + 1 - 2 * delta and extremal == symmetric
        res.record(ok, i, f"r={V.rank} d={d} delta={delta} extremal={extremal} symmetric={symmetric}", V)
    res.notes.append(f"centrally symmetric instances: {sym}")
    return res


def suite_pyramid_bound(trials, seed, sizes=Sizes(9, 4), oracles=None) -> SuiteResult:
    O = oracles or Oracles()
    res = SuiteResult("pyramid-bound")
    rng = suite_rng(res.name, seed)
    hits = 0
    for i in range(trials):
        A = random_point_config(rng, sizes.n, sizes.d)
        if rng.random() < 0.5 and A.dim < sizes.d:
            A = gen.affine_image(stack(A, rng.randint(1, sizes.d - A.dim), rng), rng)
        delta = O.degree_primal(A).degree
        applies = 2 * A.dim >= 2 * delta + A.n - 1
        hits += applies
        ok = not applies or O.is_pyramid(A) is not None
        res.record(ok, i, f"d={A.dim} n={A.n} delta={delta}: bound applies but no apex", A)
    res.notes.append(f"instances where the bound applies: {hits}")
    return res


def suite_section_quotient(trials, seed, sizes=Sizes(10, 4), oracles=None) -> SuiteResult:
    O = oracles or Oracles()
    res = SuiteResult("section-quotient")
    rng = suite_rng(res.name, seed)
    for i in range(trials):
        r = rng.randint(1, sizes.d)
        n = rng.randint(r + 1, max(r + 1, sizes.n))
        V = gen.random_vectors(n, r, rng)
        seed_labels = rng.sample(list(V.labels), rng.randint(1, r))
        W = closed_subset(V, seed_labels)
        try:
            d_sec, d_quo, d_all = O.section_quotient_degrees(V, W)
            ok = d_all >= d_sec + d_quo
            msg = f"W={W}: {d_all} vs {d_sec} + {d_quo}"
        except AssertionError as exc:
            ok, msg = False, str(exc)
        res.record(ok, i, msg, V)
    return res


def suite_conjecture(trials, seed, sizes=Sizes(10, 4), oracles=None) -> SuiteResult:
    """Record whether the weak Cayley length reaches ``d + 1 - 2 delta``; never fails."""
    O = oracles or Oracles()
    res = SuiteResult("conjecture", informational=True)
    rng = suite_rng(res.name, seed)
    instances = [config.gale_dual(gen.pentagon_join(2))]
    for _ in range(trials):
        r = rng.randint(1, sizes.d)
        n = rng.randint(r + 1, max(r + 1, sizes.n))
        instances.append(gen.random_vectors(n, r, rng))
    equal = applicable = 0
    for i, V in enumerate(instances):
        d = V.n - V.rank - 1
        delta = O.dual_degree(V).degree
        L = O.max_weak_cayley(V).length
        if 2 * delta >= d:
            res.record(True, i, "")
            continue
        applicable += 1
        bound = d + 1 - 2 * delta
        equal += L == bound
        res.record(L >= bound, i, f"candidate: d={d} delta={delta} weak length {L} < {bound}", V)
        if i == 0:
            res.notes.append(f"pentagon-join 2: weak length {L}, bound {bound}")
    res.notes.append(f"applicable instances: {applicable}, attaining the bound: {equal}")
    return res


SUITES = {
    "primal-dual": suite_primal_dual,
    "deg1": suite_deg1,
    "cayley-bound": suite_cayley_bound,
    "core-tverberg": suite_core_tverberg,
    "lawrence": suite_lawrence,
    "pyramid-bound": suite_pyramid_bound,
    "section-quotient": suite_section_quotient,
    "conjecture": suite_conjecture,
}

DEFAULT_TRIALS = {
    "primal-dual": 200,
    "deg1": 50,
    "cayley-bound": 200,
    "core-tverberg": 200,
    "lawrence": 100,
    "pyramid-bound": 200,
    "section-quotient": 200,
    "conjecture": 60,
}


def run_suite(name: str, trials: int | None = None, seed: int = 0,
              sizes: Sizes | None = None, oracles: Oracles | None = None) -> SuiteResult:
    fn = SUITES[name]
    kwargs = {"oracles": oracles}
    if sizes is not None:
        kwargs["sizes"] = sizes
    return fn(DEFAULT_TRIALS[name] if trials is None else trials, seed, **kwargs)
