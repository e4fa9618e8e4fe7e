"""Command line front end.

Exit codes: 0 success, 1 a theorem check (or certificate) failed, 2 bad
input, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import checks, circuits, classify, config, degree, depth, generators
from .config import ConfigurationError, PointConfiguration, VectorConfiguration
from .exactnum import (
    QMatrix,
    convex_combination,
    dot,
    find_point,
    kernel_basis,
    positive_dependence,
    rank,
)
from .fileio import (
    ConfigFileError,
    dumps,
    format_config,
    format_rational,
    load,
    parse_rational,
    q,
    qvec,
    sha256,
    unq,
    unqvec,
)

EXIT_OK, EXIT_THEOREM, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _need_points(C):
    if not isinstance(C, PointConfiguration):
        raise InputError("this command needs a 'points' file")
    return C


def _parse_point(text: str, dim: int) -> tuple:
    try:
        x = tuple(parse_rational(t) for t in text.replace(",", " ").split())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"--point: {exc}") from None
    if len(x) != dim:
        raise InputError(f"--point has {len(x)} coordinates, the configuration lives in R^{dim}")
    return x


def _homog(p) -> tuple:
    return tuple(p) + (Fraction(1),)


def _lines(pairs) -> str:
    return "\n".join(f"{k}: {v}" for k, v in pairs) + "\n"


def _fmt_vec(v) -> str:
    return "(" + ",".join(format_rational(x) for x in v) + ")"


# ---------------------------------------------------------------------------
# witnesses shared by several commands

def interior_certificate(A: PointConfiguration, S) -> dict:
    """Weights ``lam > 0`` on A and ``mu > 0`` on S with equal barycenters.

    The common point is then interior to conv(A) and relatively interior to
    conv(S), so S is an interior face.
    """
    S = list(S)
    W = [_homog(p) for p in A.points] + [tuple(-x for x in _homog(A.point(l))) for l in S]
    dep = positive_dependence(W)
    if dep is None:
        raise AssertionError(f"{S} is not an interior face")
    lam, mu = dep[:A.n], dep[A.n:]
    t = sum(lam)
    return {"lambda": [q(Fraction(x, t)) for x in lam], "mu": [q(Fraction(x, t)) for x in mu]}


def check_interior_certificate(A: PointConfiguration, S, cert) -> bool:
    lam = unqvec(cert["lambda"])
    mu = unqvec(cert["mu"])
    if len(lam) != A.n or len(mu) != len(S) or not S:
        return False
    if any(x <= 0 for x in lam + mu) or sum(lam) != 1 or sum(mu) != 1:
        return False
    for k in range(A.dim):
        left = sum(l * p[k] for l, p in zip(lam, A.points))
        right = sum(m * A.point(s)[k] for m, s in zip(mu, S))
        if left != right:
            return False
    return True


def apex_functionals(B: PointConfiguration, apices) -> list:
    """For apex j: a functional on homogenized points vanishing off apices[:j+1], 1 at apex j."""
    out = []
    for j, a in enumerate(apices):
        gone = set(apices[: j + 1])
        eq = [_homog(p) for l, p in zip(B.labels, B.points) if l not in gone]
        c = find_point(B.dim + 1, eq + [_homog(B.point(a))], [0] * len(eq) + [1])
        if c is None:
            raise AssertionError(f"label {a} is not an apex")
        out.append(qvec(c))
    return out


def _positive_coefficients(V: VectorConfiguration, labels) -> list[str]:
    dep = positive_dependence([V.vector(l) for l in labels])
    if dep is None:
        raise AssertionError(f"{labels} is not a positive vector")
    return qvec(dep)


def _check_positive(vectors: dict, labels, coeffs) -> bool:
    lam = unqvec(coeffs)
    if len(lam) != len(labels) or not labels or any(x <= 0 for x in lam):
        return False
    width = len(next(iter(vectors.values()))) if vectors else 0
    return all(sum(l * vectors[s][k] for l, s in zip(lam, labels)) == 0 for k in range(width))


def _vectors_json(V: VectorConfiguration) -> dict:
    return {"rank": V.rank, "labels": list(V.labels), "vectors": [qvec(v) for v in V.vectors]}


def _vectors_from_json(obj) -> dict:
    return {l: unqvec(v) for l, v in zip(obj["labels"], obj["vectors"])}


def _dual_of(C):
    if isinstance(C, PointConfiguration):
        return config.gale_dual(C), "gale dual"
    return C, "input"


# ---------------------------------------------------------------------------
# commands; each returns (text, result record, exit code)

def cmd_analyze(C, args):
    if isinstance(C, VectorConfiguration):
        rep = degree.dual_degree(C)
        res = {
            "kind": "vectors", "r": C.rank, "n": C.n,
            "dual_degree": rep.degree, "dual_codegree": rep.codegree,
            "hitting_set": list(rep.witness_interior_face),
            "hyperplane": qvec(rep.witness_hyperplane.normal) if rep.witness_hyperplane else None,
        }
        text = _lines([("r", C.rank), ("n", C.n), ("dual degree", rep.degree),
                       ("dual codegree", rep.codegree),
                       ("minimum hitting set of positive circuits", list(rep.witness_interior_face))])
        return text, res, EXIT_OK
    A = C
    B, mult = config.dedup_points(A)
    _, apices = config.strip_pyramids(B)
    rep = degree.degree_primal(A)
    fs = degree.facets(A)
    res = {
        "kind": "points", "d": A.dim, "n": A.n,
        "multiplicities": [[l, m] for l, m in sorted(mult.items())],
        "apices": list(apices),
        "apex_functionals": apex_functionals(B, apices),
        "degree": rep.degree, "codegree": rep.codegree,
        "witness_interior_face": list(rep.witness_interior_face),
        "interior_certificate": interior_certificate(A, rep.witness_interior_face),
        "facets": [{"normal": qvec(f.support.normal), "members": list(f.members)} for f in fs],
        "facet_count": len(fs),
    }
    repeated = {l: m for l, m in mult.items() if m > 1}
    text = _lines([
        ("d", A.dim), ("n", A.n),
        ("repeated points", repeated or "none"),
        ("pyramid apices", list(apices) or "none"),
        ("degree", rep.degree), ("codegree", rep.codegree),
        ("witness interior face", list(rep.witness_interior_face)),
        ("facets", len(fs)),
    ])
    return text, res, EXIT_OK


def cmd_gale(C, args):
    A = _need_points(C)
    V = config.gale_dual(A)
    text = format_config(V)
    return text, _vectors_json(V), EXIT_OK


def cmd_circuits(C, args):
    V, source = _dual_of(C)
    rows = []
    for sc in circuits.circuits(V):
        sup = list(sc.support)
        ker = kernel_basis(QMatrix.from_columns([V.vector(l) for l in sup], V.rank))
        if len(ker) != 1:
            raise AssertionError(f"{sup} is not a circuit")
        lab = dict(zip(sup, ker[0]))
        if lab[sup[0]] < 0:
            lab = {l: -v for l, v in lab.items()}
        rows.append((sc.sort_key(), sc, lab))
    rows.sort(key=lambda t: t[0])
    res = {
        "configuration": source,
        "vectors": _vectors_json(V),
        "circuits": [{"pos": sorted(sc.pos), "neg": sorted(sc.neg),
                      "coefficients": [[l, q(lab[l])] for l in sorted(lab)]} for _, sc, lab in rows],
        "positive_count": sum(1 for _, sc, _ in rows if sc.is_positive),
    }
    out = [f"configuration: {source}", f"circuits: {len(rows)}", f"positive: {res['positive_count']}"]
    for _, sc, _ in rows:
        out.append(f"  +{sorted(sc.pos)} -{sorted(sc.neg)}")
    return "\n".join(out) + "\n", res, EXIT_OK


def cmd_cayley(C, args):
    V, source = _dual_of(C)
    W = circuits.max_weak_cayley(V)
    K = circuits.max_combinatorial_cayley(V)
    res = {
        "configuration": source,
        "vectors": _vectors_json(V),
        "weak": {"length": W.length, "factors": [list(f) for f in W.factors],
                 "residual": list(W.residual),
                 "dependences": [_positive_coefficients(V, f) for f in W.factors]},
        "combinatorial": None if K is None else {
            "length": K.length, "parts": [list(p) for p in K.parts],
            "dependences": [_positive_coefficients(V, p) for p in K.parts]},
    }
    out = [f"configuration: {source}",
           f"weak Cayley length: {W.length}",
           f"  factors: {[list(f) for f in W.factors]}",
           f"  residual: {list(W.residual)}"]
    if K is None:
        out.append("combinatorial Cayley: none (not totally cyclic)")
    else:
        out.append(f"combinatorial Cayley length: {K.length}")
        out.append(f"  parts: {[list(p) for p in K.parts]}")
    if isinstance(C, PointConfiguration):
        chk = circuits.verify_weak_cayley_primal(C, W)
        res["primal_witnesses"] = [None if w is None else {"normal": qvec(w[0]), "offset": q(w[1])}
                                   for w in chk.witnesses]
        if not chk.ok or not chk.gale_ok:
            raise AssertionError("weak Cayley factors do not translate to primal faces")
    return "\n".join(out) + "\n", res, EXIT_OK


def classification_to_json(c: classify.Classification) -> dict:
    return {
        "kind": c.kind.value, "dim": c.dim, "labels": list(c.labels),
        "dedup_multiplicities": [[l, m] for l, m in sorted(c.dedup_multiplicities.items())],
        "apices": list(c.apices),
        "inner": None if c.inner is None else classification_to_json(c.inner),
        "top": list(c.top), "bottom": list(c.bottom),
        "vertical": [list(p) for p in c.vertical],
        "edge_points": [[l, u, w] for l, (u, w) in sorted(c.edge_points.items())],
        "apex_vertex": c.apex_vertex,
        "edge_lists": [[v, list(pts)] for v, pts in sorted(c.edge_lists.items())],
        "witness": list(c.witness),
    }


def classification_from_json(obj) -> classify.Classification:
    return classify.Classification(
        kind=classify.Kind(obj["kind"]), dim=obj["dim"], labels=tuple(obj["labels"]),
        dedup_multiplicities={l: m for l, m in obj["dedup_multiplicities"]},
        apices=tuple(obj["apices"]),
        inner=None if obj["inner"] is None else classification_from_json(obj["inner"]),
        top=tuple(obj["top"]), bottom=tuple(obj["bottom"]),
        vertical=tuple(tuple(p) for p in obj["vertical"]),
        edge_points={l: (u, w) for l, u, w in obj["edge_points"]},
        apex_vertex=obj["apex_vertex"],
        edge_lists={v: tuple(pts) for v, pts in obj["edge_lists"]},
        witness=tuple(obj["witness"]),
    )


def _describe(c: classify.Classification, indent="") -> list[str]:
    out = [f"{indent}{c.kind.value}"]
    k = c.kind
    if k is classify.Kind.PYRAMID:
        out.append(f"{indent}  apices: {list(c.apices)}")
        out += _describe(c.inner, indent + "  ")
    elif k is classify.Kind.PRISM_OVER_SIMPLEX_EDGE_POINTS:
        out.append(f"{indent}  top facet: {list(c.top)}")
        out.append(f"{indent}  bottom facet: {list(c.bottom)}")
        out.append(f"{indent}  vertical edges: {[list(p) for p in c.vertical]}")
        out.append(f"{indent}  edge points: {dict(sorted(c.edge_points.items()))}")
    elif k is classify.Kind.SIMPLEX_EDGE_POINTS_AT_VERTEX:
        out.append(f"{indent}  apex vertex: {c.apex_vertex}")
        out.append(f"{indent}  edge points: {dict(sorted(c.edge_lists.items()))}")
    elif k is classify.Kind.NOT_DEG_LE_1:
        out.append(f"{indent}  witness interior face: {list(c.witness)}")
    return out


def cmd_classify(C, args):
    A = _need_points(C)
    c = classify.classify_low_degree(A)
    res = {"classification": classification_to_json(c)}
    if c.kind is classify.Kind.NOT_DEG_LE_1:
        res["interior_certificate"] = interior_certificate(A, c.witness)
    return "\n".join(_describe(c)) + "\n", res, EXIT_OK


def cmd_depth(C, args):
    A = _need_points(C)
    x = _parse_point(args.point, A.dim)
    rep = depth.halfspace_depth(A, x)
    normal = rep.witness_halfspace.normal if rep.witness_halfspace else None
    res = {"point": qvec(x), "depth": rep.depth, "normal": None if normal is None else qvec(normal)}
    text = _lines([("point", _fmt_vec(x)), ("depth", rep.depth),
                   ("witness halfspace normal", _fmt_vec(normal) if normal else "none")])
    return text, res, EXIT_OK


def cmd_tverberg(C, args):
    A = _need_points(C)
    x = _parse_point(args.point, A.dim)
    rep = depth.tverberg_order(A, x)
    weights = []
    for part in rep.partition:
        w = convex_combination(x, [A.point(l) for l in part])
        if w is None:
            raise AssertionError(f"part {part} does not contain the point")
        weights.append(qvec(w))
    res = {"point": qvec(x), "order": rep.order,
           "partition": [list(p) for p in rep.partition], "weights": weights}
    text = _lines([("point", _fmt_vec(x)), ("order", rep.order),
                   ("partition", [list(p) for p in rep.partition])])
    return text, res, EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "gale": cmd_gale,
    "circuits": cmd_circuits,
    "cayley": cmd_cayley,
    "classify": cmd_classify,
    "depth": cmd_depth,
    "tverberg": cmd_tverberg,
}


# ---------------------------------------------------------------------------
# certificate verification: substitution only

def _facet_ok(A: PointConfiguration, f) -> bool:
    c = unqvec(f["normal"])
    if len(c) != A.dim + 1 or not any(c[:-1]):
        return False
    on = set()
    for l, p in zip(A.labels, A.points):
        v = dot(c, _homog(p))
        if v < 0:
            return False
        if v == 0:
            on.add(l)
    return on == set(f["members"])


def verify_certificate(cert: dict) -> list[str]:
    """Names of the checks that failed (empty when the certificate holds)."""
    text = cert["input"]
    if sha256(text) != cert["input_sha256"]:
        return ["input hash"]
    C = load(text)
    res = cert["result"]
    name = cert["command_name"]
    bad = []

    def need(ok, what):
        if not ok:
            bad.append(what)

    def gale_ok(vjson):
        vecs = _vectors_from_json(vjson)
        if isinstance(C, VectorConfiguration):
            return all(vecs[l] == C.vector(l) for l in C.labels) and len(vecs) == C.n
        A = C
        r = vjson["rank"]
        if r != A.n - A.dim - 1 or set(vecs) != set(A.labels):
            return False
        for k in range(r):
            for j in range(A.dim + 1):
                if sum(vecs[l][k] * _homog(A.point(l))[j] for l in A.labels) != 0:
                    return False
        return r == 0 or rank(QMatrix.from_columns([vecs[l] for l in A.labels], r)) == r

    if name == "analyze" and res["kind"] == "vectors":
        V = C
        H = set(res["hitting_set"])
        need(res["dual_codegree"] == len(H), "codegree matches witness size")
        need(res["dual_degree"] == V.n - V.rank - len(H), "degree formula")
        if res["hyperplane"] is not None:
            c = unqvec(res["hyperplane"])
            need(all(dot(c, V.vector(l)) > 0 for l in V.labels if l not in H),
                 "hyperplane has the complement strictly on its positive side")
    elif name == "analyze":
        A = C
        S = res["witness_interior_face"]
        need(check_interior_certificate(A, S, res["interior_certificate"]), "interior face")
        need(res["codegree"] == len(S) and res["degree"] == A.dim + 1 - len(S), "degree formula")
        need(all(_facet_ok(A, f) for f in res["facets"]), "facets")
        need(res["facet_count"] == len(res["facets"]), "facet count")
        need(all(not set(S) <= set(f["members"]) for f in res["facets"]),
             "witness lies in no listed facet")
        first: dict = {}
        mult: dict = {}
        for l, p in zip(A.labels, A.points):
            key = first.setdefault(p, l)
            mult[key] = mult.get(key, 0) + 1
        need(sorted(mult.items()) == [tuple(x) for x in res["multiplicities"]], "multiplicities")
        gone: set = set()
        kept = set(mult)
        for a, f in zip(res["apices"], res["apex_functionals"]):
            gone.add(a)
            c = unqvec(f)
            need(dot(c, _homog(A.point(a))) != 0
                 and all(dot(c, _homog(A.point(l))) == 0 for l in kept - gone), f"apex {a}")
    elif name == "gale":
        need(gale_ok(res), "gale relation")
    elif name == "circuits":
        need(gale_ok(res["vectors"]), "vectors")
        vecs = _vectors_from_json(res["vectors"])
        for cr in res["circuits"]:
            coef = {l: unq(v) for l, v in cr["coefficients"]}
            need(set(coef) == set(cr["pos"]) | set(cr["neg"])
                 and all(coef[l] > 0 for l in cr["pos"]) and all(coef[l] < 0 for l in cr["neg"])
                 and all(sum(coef[l] * vecs[l][k] for l in coef) == 0
                         for k in range(res["vectors"]["rank"])),
                 f"circuit {cr['pos']}/{cr['neg']}")
        need(res["positive_count"] == sum(1 for cr in res["circuits"] if not cr["neg"]),
             "positive count")
    elif name == "cayley":
        need(gale_ok(res["vectors"]), "vectors")
        vecs = _vectors_from_json(res["vectors"])
        w = res["weak"]
        flat = [l for f in w["factors"] for l in f]
        need(len(flat) == len(set(flat)) and sorted(set(vecs) - set(flat)) == w["residual"],
             "weak factors are disjoint with the stated residual")
        need(w["length"] == len(w["factors"]), "weak length")
        for f, dep in zip(w["factors"], w["dependences"]):
            need(_check_positive(vecs, f, dep), f"factor {f} positive")
        k = res["combinatorial"]
        if k is not None:
            flat = sorted(l for p in k["parts"] for l in p)
            need(flat == sorted(vecs), "combinatorial parts partition the labels")
            need(k["length"] == len(k["parts"]), "combinatorial length")
            for p, dep in zip(k["parts"], k["dependences"]):
                need(_check_positive(vecs, p, dep), f"part {p} positive")
        if "primal_witnesses" in res:
            A = C
            for f, wit in zip(w["factors"], res["primal_witnesses"]):
                ok = wit is not None
                if ok:
                    c, c0 = unqvec(wit["normal"]), unq(wit["offset"])
                    vals = {l: dot(c, A.point(l)) - c0 for l in A.labels}
                    ok = all((v > 0) if l in f else (v == 0) for l, v in vals.items())
                need(ok, f"primal face for factor {f}")
    elif name == "classify":
        c = classification_from_json(res["classification"])
        need(classify.verify_classification(_need_points(C), c), "classification witness")
        if c.kind is classify.Kind.NOT_DEG_LE_1:
            need(check_interior_certificate(C, list(c.witness), res["interior_certificate"]),
                 "interior face")
    elif name == "depth":
        x = unqvec(res["point"])
        if res["normal"] is None:
            need(res["depth"] == C.n, "depth without normal")
        else:
            c = unqvec(res["normal"])
            count = sum(1 for p in C.points if dot(c, [a - b for a, b in zip(p, x)]) >= 0)
            need(count == res["depth"], "halfspace count")
    elif name == "tverberg":
        x = unqvec(res["point"])
        flat = [l for p in res["partition"] for l in p]
        need(len(flat) == len(set(flat)) and res["order"] == len(res["partition"]), "partition")
        for part, wts in zip(res["partition"], res["weights"]):
            w = unqvec(wts)
            ok = len(w) == len(part) and all(v >= 0 for v in w) and sum(w) == 1
            ok = ok and all(sum(v * C.point(l)[k] for v, l in zip(w, part)) == x[k]
                            for k in range(C.dim))
            need(ok, f"part {part} contains the point")
    else:
        bad.append(f"unknown command {name!r}")
    return bad


# ---------------------------------------------------------------------------
# argument handling

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="galedeg", description=__doc__.splitlines()[0])
    p.add_argument("--verify", metavar="CERT", help="check a JSON certificate by substitution")
    sub = p.add_subparsers(dest="command")

    def with_file(name, help):
        s = sub.add_parser(name, help=help)
        s.add_argument("file", help="configuration file ('-' for stdin)")
        s.add_argument("--json", action="store_true", help="print a JSON certificate")
        return s

    with_file("analyze", "degree, codegree, facets, apices, repeated points")
    with_file("gale", "Gale dual as a vectors file")
    with_file("circuits", "signed circuits (of the Gale dual for points files)")
    with_file("cayley", "longest weak and combinatorial Cayley decompositions")
    with_file("classify", "degree <= 1 classification")
    for name in ("depth", "tverberg"):
        s = with_file(name, f"{'halfspace depth' if name == 'depth' else 'Tverberg order'} at a point")
        s.add_argument("--point", required=True, help="coordinates, e.g. '100/31 60/31'")

    g = sub.add_parser("gen", help="write an example configuration")
    g.add_argument("name", choices=generators.GENERATOR_NAMES)
    g.add_argument("params", nargs="*", type=int)
    g.add_argument("--seed", type=int, default=0)

    c = sub.add_parser("check", help="randomized theorem checks")
    c.add_argument("suite", nargs="?", default="all", choices=["all", *checks.SUITES])
    c.add_argument("--trials", type=int, default=None)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--sizes", default=None, help="max points and dimension/rank, 'N,D'")
    c.add_argument("--json", action="store_true")
    return p


def _run_check(args, oracles, out) -> int:
    sizes = checks.Sizes.parse(args.sizes) if args.sizes else None
    if args.trials is not None and args.trials < 0:
        raise InputError("--trials must be nonnegative")
    names = list(checks.SUITES) if args.suite == "all" else [args.suite]
    results = [checks.run_suite(n, args.trials, args.seed, sizes, oracles) for n in names]
    ok = all(r.ok for r in results)
    if args.json:
        out.write(dumps({
            "command": ["check", args.suite], "seed": args.seed,
            "suites": [{"name": r.name, "total": r.total, "passed": r.passed, "ok": r.ok,
                        "notes": r.notes,
                        "failures": [{"trial": t, "message": m,
                                      "instance": None if i is None else checks._serialize(i)}
                                     for t, m, i in r.failures]} for r in results],
            "ok": ok}))
    else:
        for r in results:
            out.write(r.report() + "\n")
        out.write(f"overall: {'ok' if ok else 'FAILED'}\n")
    return EXIT_OK if ok else EXIT_THEOREM


def main(argv=None, oracles=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        if args.verify:
            try:
                cert = json.loads(_read(args.verify))
                bad = verify_certificate(cert)
            except (KeyError, TypeError, ValueError) as exc:
                if isinstance(exc, (ConfigFileError, ConfigurationError)):
                    raise
                raise InputError(f"malformed certificate: {exc}") from None
            if bad:
                out.write("certificate FAILED: " + ", ".join(bad) + "\n")
                return EXIT_THEOREM
            out.write("certificate ok\n")
            return EXIT_OK
        if args.command is None:
            parser.print_usage(err)
            return EXIT_INPUT
        if args.command == "gen":
            try:
                C = generators.from_name(args.name, args.params, args.seed)
            except ValueError as exc:
                raise InputError(str(exc)) from None
            out.write(format_config(C))
            return EXIT_OK
        if args.command == "check":
            try:
                return _run_check(args, oracles, out)
            except ValueError as exc:
                raise InputError(str(exc)) from None
        text = _read(args.file)
        C = load(text)
        body, res, code = COMMANDS[args.command](C, args)
        if args.json:
            out.write(dumps({
                "command": argv, "command_name": args.command,
                "input_sha256": sha256(text), "input": text, "result": res,
            }))
        else:
            out.write(body)
        return code
    except (InputError, ConfigFileError, ConfigurationError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except Exception as exc:  # assertion or bug: report, never a traceback
        err.write(f"internal error: {type(exc).__name__}: {exc}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
