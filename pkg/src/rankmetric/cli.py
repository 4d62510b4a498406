"""Command-line front end for the rank-metric toolkit.

Subcommands::

    field rank ball els code gabidulin bounds
    table1 table2 macwilliams moments search verify

Ranges are written "2..7" (inclusive).  Machine formats (csv, json) echo
the fully resolved run configuration: CSV output starts with a versioned
comment line ``# rankmetric-table v1 config: ...`` and JSON output carries
a ``config`` object.  Plain text output stays minimal for human use.

Exit codes: 0 success, 1 usage or input error, 2 verification failure,
3 inconclusive (a search or scan gave up at its budget).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import bounds as bd
from . import codes as cd
from . import oracle as oc
from . import rankgeom as rg
from . import wenum as we
from .ffield import make_field

TABLE_VERSION = "rankmetric-table v1"

CSV_COLUMNS_1 = ("m", "n", "rho", "a", "b", "c", "A", "B", "C", "D", "E",
                 "best_lower", "lower_tag", "best_upper", "upper_tag")
CSV_COLUMNS_2 = ("m", "n", "rho", "k_lower", "k_upper")


# ---------------------------------------------------------------------------
# plumbing
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RunConfig:
    """Fully resolved run parameters; echoed into machine-format output."""
    command: str
    options: tuple  # sorted (key, value) pairs

    def as_dict(self):
        return {"command": self.command, **dict(self.options)}

    def echo(self):
        pairs = " ".join(f"{k}={v}" for k, v in self.options)
        return f"command={self.command} {pairs}" if pairs else \
            f"command={self.command}"


def make_config(command, **options):
    return RunConfig(command, tuple(sorted(options.items())))


def parse_range(text):
    """'2..7' -> range(2, 8); '3' -> range(3, 4)."""
    lo, dots, hi = text.partition("..")
    try:
        if dots:
            r = range(int(lo), int(hi) + 1)
        else:
            v = int(text)
            r = range(v, v + 1)
    except ValueError:
        raise ValueError(f"bad range {text!r}; use N or LO..HI") from None
    if len(r) == 0:
        raise ValueError(f"empty range {text!r}")
    return r


def echo_range(r):
    return str(r.start) if len(r) == 1 else f"{r.start}..{r.stop - 1}"


def parse_ints(text):
    return tuple(int(t) for t in text.replace(",", " ").split())


def emit_json(cfg, payload):
    print(json.dumps({"config": cfg.as_dict(), **payload}, sort_keys=True))


def csv_header(cfg, columns):
    print(f"# {TABLE_VERSION} config: {cfg.echo()}")
    print(",".join(columns))


def default_workers():
    return int(os.environ.get("RANKMETRIC_WORKERS", "1"))


# ---------------------------------------------------------------------------
# simple queries
# ---------------------------------------------------------------------------

def _field_from_args(args):
    modulus = parse_ints(args.modulus) if getattr(args, "modulus", None) \
        else None
    return make_field(args.q, args.m, modulus)


def cmd_field(args):
    F = _field_from_args(args)
    cfg = make_config("field", q=F.q, m=F.m,
                      modulus=" ".join(map(str, F.modulus)))
    if args.format == "json":
        emit_json(cfg, {"order": F.order, "descriptor": F.descriptor(),
                        "polynomial_basis": list(F.polynomial_basis())})
    else:
        print(f"GF({F.q}^{F.m}), order {F.order}")
        print(f"modulus: {' '.join(map(str, F.modulus))} (low to high)")
        print(f"descriptor: {F.descriptor()}")
    return 0


def cmd_rank(args):
    F = _field_from_args(args)
    vec = parse_ints(args.vec)
    if args.vec2 is not None:
        vec2 = parse_ints(args.vec2)
        if len(vec2) != len(vec):
            raise ValueError("vectors of different lengths")
        print(rg.rank_distance(F, vec, vec2))
    else:
        print(rg.rank(F, vec))
    return 0


def cmd_ball(args):
    cfg = make_config("ball", q=args.q, m=args.m, n=args.n, r=args.r)
    sphere, ball = rg.ball_counts(args.q, args.m, args.n, args.r)
    lo, hi = rg.ball_volume_bounds(args.q, args.m, args.n, args.r)
    if args.format == "json":
        emit_json(cfg, {"sphere": sphere, "ball": ball,
                        "lower": int(lo), "upper": float(hi)})
    else:
        print(f"sphere N_{args.r} = {sphere}")
        print(f"ball   V_{args.r} = {ball}")
        print(f"bounds {lo} <= V <= {hi}")
    return 0


def cmd_els(args):
    cfg = make_config("els", q=args.q, n=args.n,
                      v="all" if args.v is None else args.v)
    dims = range(args.n + 1) if args.v is None else (args.v,)
    counts = {v: rg.gaussian(args.n, v, args.q) for v in dims}
    if args.format == "json":
        payload = {"counts": {str(v): c for v, c in counts.items()}}
        if args.list:
            payload["bases"] = {
                str(v): [[list(r) for r in e.basis]
                         for e in rg.enumerate_els(args.q, 1, args.n, v)]
                for v in dims}
        emit_json(cfg, payload)
    else:
        for v in dims:
            print(f"dim {v}: {counts[v]} subspaces")
            if args.list:
                for e in rg.enumerate_els(args.q, 1, args.n, v):
                    rows = "; ".join(" ".join(map(str, r)) for r in e.basis)
                    print(f"  [{rows}]")
    return 0


# ---------------------------------------------------------------------------
# codes
# ---------------------------------------------------------------------------

def cmd_code(args):
    code = cd.read_code(args.file)
    F = code.field
    if args.dual:
        sys.stdout.write(cd.format_code(cd.dual(code)))
        return 0
    cfg = make_config("code", file=args.file, q=F.q, m=F.m,
                      n=code.n, k=code.k)
    dist = cd.rank_distribution(code)
    d = cd.min_rank_distance(code)
    radius = None
    radius_note = ""
    if args.radius:
        try:
            radius = cd.covering_radius(code)
        except ValueError as exc:  # guard trip: report and continue
            radius_note = str(exc)
    if args.format == "json":
        payload = {"n": code.n, "k": code.k, "size": code.size,
                   "min_rank_distance": d,
                   "rank_distribution": list(dist)}
        if args.radius:
            payload["covering_radius"] = radius
            if radius_note:
                payload["covering_radius_skipped"] = radius_note
        emit_json(cfg, payload)
    else:
        print(f"(n, k) = ({code.n}, {code.k}) over GF({F.q}^{F.m}), "
              f"size {code.size}")
        print(f"min rank distance: {d}")
        print(f"rank distribution: {tuple(dist)}")
        if args.radius:
            if radius is not None:
                print(f"covering radius: {radius}")
            else:
                print(f"covering radius: skipped ({radius_note})")
    return 0


def cmd_gabidulin(args):
    F = make_field(args.q, args.m)
    if args.g:
        g = parse_ints(args.g)
    else:
        g = tuple(F.q ** i for i in range(args.n))  # polynomial basis slice
    code = cd.gabidulin(F, g, args.k, args.a)
    if args.check:
        d = cd.min_rank_distance(code)
        mrd = cd.mrd_els_check(code)
        print(f"# min_rank_distance: {d} (Singleton: {code.n - code.k + 1})")
        print(f"# mrd_els_check: {mrd}")
        if d != code.n - code.k + 1 or not mrd:
            sys.stdout.write(cd.format_code(code))
            return 2
    sys.stdout.write(cd.format_code(code))
    return 0


# ---------------------------------------------------------------------------
# bounds and tables
# ---------------------------------------------------------------------------

def cmd_bounds(args):
    rep = bd.covering_report(args.q, args.m, args.n, args.rho)
    mm, nn = max(args.m, args.n), min(args.m, args.n)
    dims = bd.linear_dim_bounds(args.q, mm, nn, args.rho) \
        if args.rho <= nn else (0, 0)
    cfg = make_config("bounds", q=args.q, m=args.m, n=args.n, rho=args.rho)
    if args.format == "json":
        emit_json(cfg, {
            "lower": rep.lower, "upper": rep.upper,
            "best_lower": rep.best_lower, "lower_tag": rep.best_lower_tag,
            "best_upper": rep.best_upper, "upper_tag": rep.best_upper_tag,
            "exact": rep.exact, "summary": bd.format_report(rep),
            "k_lower": dims[0], "k_upper": dims[1]})
    else:
        print(f"K_R({args.q}^{args.m}, {args.n}, {args.rho}): "
              f"{bd.format_report(rep)}")
        if rep.lower:
            print("lower:", " ".join(f"{t}={v}" for t, v in
                                     rep.lower.items() if v is not None))
            print("upper:", " ".join(f"{t}={v}" for t, v in
                                     rep.upper.items() if v is not None))
        print(f"linear dimension k: {dims[0]}..{dims[1]}")
    return 0


def _cell_str(value):
    return "" if value is None else str(value)


def cmd_table1(args):
    m_range = parse_range(args.m)
    n_range = parse_range(args.n) if args.n else m_range
    rho_range = parse_range(args.rho)
    workers = args.workers or default_workers()
    cfg = make_config("table1", q=args.q, m=echo_range(m_range),
                      n=echo_range(n_range), rho=echo_range(rho_range),
                      format=args.format, workers=workers)
    table = bd.covering_table(args.q, m_range, n_range, rho_range,
                              workers=workers)
    cells = sorted(table)
    if args.format == "json":
        rows = []
        for key in cells:
            rep = table[key]
            rows.append({"m": rep.m, "n": rep.n, "rho": rep.rho,
                         "lower": rep.lower, "upper": rep.upper,
                         "best_lower": rep.best_lower,
                         "lower_tag": rep.best_lower_tag,
                         "best_upper": rep.best_upper,
                         "upper_tag": rep.best_upper_tag,
                         "exact": rep.exact})
        emit_json(cfg, {"cells": rows})
        return 0
    csv_header(cfg, CSV_COLUMNS_1)
    for key in cells:
        rep = table[key]
        row = [rep.m, rep.n, rep.rho]
        row += [_cell_str(rep.lower.get(t)) for t in bd.LOWER_TAGS]
        row += [_cell_str(rep.upper.get(t)) for t in bd.UPPER_TAGS]
        row += [rep.best_lower, _cell_str(rep.best_lower_tag),
                rep.best_upper, _cell_str(rep.best_upper_tag)]
        print(",".join(str(x) for x in row))
    return 0


def cmd_table2(args):
    m_range = parse_range(args.m)
    n_range = parse_range(args.n) if args.n else m_range
    rho_range = parse_range(args.rho)
    cfg = make_config("table2", q=args.q, m=echo_range(m_range),
                      n=echo_range(n_range), rho=echo_range(rho_range),
                      format=args.format)
    table = bd.dimension_table(args.q, m_range, n_range, rho_range)
    cells = sorted(table)
    if args.format == "json":
        rows = [{"m": m, "n": n, "rho": rho,
                 "k_lower": table[(m, n, rho)][0],
                 "k_upper": table[(m, n, rho)][1]}
                for m, n, rho in cells]
        emit_json(cfg, {"cells": rows})
        return 0
    csv_header(cfg, CSV_COLUMNS_2)
    for m, n, rho in cells:
        lo, hi = table[(m, n, rho)]
        print(f"{m},{n},{rho},{lo},{hi}")
    return 0


# ---------------------------------------------------------------------------
# weight enumerators
# ---------------------------------------------------------------------------

def _enumerator_from_args(args):
    if args.code:
        code = cd.read_code(args.code)
        return we.code_enumerator(code)
    if not args.dist:
        raise ValueError("need --code FILE or --dist plus --q/--m")
    coeffs = parse_ints(args.dist)
    if args.q is None or args.m is None:
        raise ValueError("--dist needs explicit --q and --m")
    return we.make_enumerator(args.q, args.m, len(coeffs) - 1, coeffs)


def cmd_macwilliams(args):
    A = _enumerator_from_args(args)
    B = we.macwilliams(A, method=args.method)
    k = we._code_dimension(A)
    cfg = make_config("macwilliams", q=A.q, m=A.m, n=A.n, k=k,
                      method=args.method,
                      source=args.code or f"dist:{args.dist}")
    if args.format == "json":
        checks = []
        ok = True
        for nu in range(A.n + 1):
            l1, r1, l2, r2 = we.moments(A.coeffs, B.coeffs, A.q, A.m, A.n,
                                        k, nu)
            good = l1 == r1 and l2 == r2
            ok = ok and good
            checks.append({"nu": nu, "packing": [str(l1), str(r1)],
                           "shell": [str(l2), str(r2)], "ok": good})
        emit_json(cfg, {"A": list(A.coeffs), "B": list(B.coeffs),
                        "moment_checks": checks, "ok": ok})
        return 0 if ok else 2
    print(f"A = {A.coeffs}")
    print(f"B = {B.coeffs}")
    return 0


def cmd_moments(args):
    code = cd.read_code(args.code)
    A = we.code_enumerator(code)
    B = we.code_enumerator(cd.dual(code))
    cfg = make_config("moments", file=args.code, q=A.q, m=A.m, n=A.n,
                      k=code.k)
    rows = []
    ok = True
    for nu in range(A.n + 1):
        l1, r1, l2, r2 = we.moments(A.coeffs, B.coeffs, A.q, A.m, A.n,
                                    code.k, nu)
        good = l1 == r1 and l2 == r2
        ok = ok and good
        rows.append((nu, l1, r1, l2, r2, good))
    if args.format == "json":
        emit_json(cfg, {"A": list(A.coeffs), "B": list(B.coeffs),
                        "checks": [{"nu": nu,
                                    "packing": [str(l1), str(r1)],
                                    "shell": [str(l2), str(r2)],
                                    "ok": good}
                                   for nu, l1, r1, l2, r2, good in rows],
                        "ok": ok})
    else:
        for nu, l1, r1, l2, r2, good in rows:
            state = "ok" if good else "FAIL"
            print(f"nu {nu}: packing {l1} == {r1}; shell {l2} == {r2} "
                  f"[{state}]")
    return 0 if ok else 2


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------

def _codebook_block(q, m, n, words):
    F = make_field(q, m)
    mod = " ".join(map(str, F.modulus))
    lines = [f"# codebook q={q} m={m} n={n} size={len(words)} modulus={mod}"]
    lines += [" ".join(map(str, w)) for w in words]
    return "\n".join(lines)


def cmd_search(args):
    budget = oc.SearchBudget(max_nodes=args.budget) if args.budget \
        else oc.DEFAULT_BUDGET
    if args.what == "covering":
        if args.rho is None or args.K is None:
            raise ValueError("covering search needs --rho and --K")
        dec = oc.exhaustive_min_covering(args.q, args.m, args.n, args.rho,
                                         args.K, budget)
        cfg = make_config("search", what="covering", q=args.q, m=args.m,
                          n=args.n, rho=args.rho, K=args.K,
                          seed=args.seed)
        if args.format == "json":
            emit_json(cfg, {"exists": dec.exists,
                            "witness": [list(w) for w in dec.witness]
                            if dec.witness else None})
        else:
            print(f"exists: {'true' if dec.exists else 'false'}")
            if dec.witness:
                print(_codebook_block(args.q, args.m, args.n, dec.witness))
        return 0
    if args.what == "greedy":
        if args.rho is None:
            raise ValueError("greedy search needs --rho")
        book = oc.greedy_covering(args.q, args.m, args.n, args.rho, budget)
        cfg = make_config("search", what="greedy", q=args.q, m=args.m,
                          n=args.n, rho=args.rho, seed=args.seed)
        if args.format == "json":
            emit_json(cfg, {"size": book.size,
                            "words": [list(w) for w in book.words]})
        else:
            print(_codebook_block(args.q, args.m, args.n, book.words))
        return 0
    if args.what == "maxcode":
        if args.d is None:
            raise ValueError("maxcode search needs --d")
        val = oc.max_code_search(args.q, args.m, args.n, args.d, budget)
        cfg = make_config("search", what="maxcode", q=args.q, m=args.m,
                          n=args.n, d=args.d, seed=args.seed)
        if args.format == "json":
            emit_json(cfg, {"value": val})
        else:
            print(val)
        return 0
    raise ValueError(f"unknown search kind {args.what!r}")


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _suite_geometry(trials, seed):
    checks = []
    for q, m, n in ((2, 2, 2), (2, 3, 2), (2, 2, 3), (3, 2, 2)):
        F = make_field(q, m)
        good = all(
            rg.intersection_volume_brute(F, [((0,) * n, r)])
            == rg.ball_counts(q, m, n, r)[1]
            for r in range(min(m, n) + 1))
        checks.append((f"ball volumes vs enumeration q={q} m={m} n={n}",
                       good, ""))
    bad = []
    for m, n in ((2, 2), (3, 3), (2, 3)):
        F = make_field(2, m)
        for r1 in range(1, min(m, n) + 1):
            for r2 in range(1, r1 + 1):
                for dist in range(min(m, n) + 1):
                    try:
                        closed = rg.intersection_volume_closed(
                            2, m, n, r1, r2, dist)
                    except rg.NoClosedFormError:
                        continue
                    brute = rg.intersection_volume_at_distance(
                        F, n, r1, r2, dist)
                    if closed != brute:
                        bad.append((m, n, r1, r2, dist, closed, brute))
    checks.append(("ball intersections closed vs brute", not bad, str(bad)))
    for n in range(1, 5):
        good = all(len(rg.enumerate_els(2, 1, n, v)) == rg.gaussian(n, v, 2)
                   for v in range(n + 1))
        checks.append((f"subspace counts n={n}", good, ""))
    return checks


def _suite_macwilliams(trials, seed):
    checks = []
    shapes = [(2, 2, 3), (2, 3, 3), (2, 3, 4), (3, 2, 3)]
    bad = []
    for i in range(trials):
        q, m, n = shapes[i % len(shapes)]
        k = (i % n) + 1 if n > 1 else 1
        k = min(k, n)
        code = oc.random_linear_code(q, m, n, k, seed=seed + i)
        A = we.code_enumerator(code)
        B = we.macwilliams(A)
        if tuple(B.coeffs) != tuple(cd.rank_distribution(cd.dual(code))):
            bad.append(("transform vs dual", q, m, n, k, i))
            continue
        if we.macwilliams(B).coeffs != A.coeffs:
            bad.append(("involution", q, m, n, k, i))
        if we.macwilliams(A, method="qproduct").coeffs != B.coeffs:
            bad.append(("method agreement", q, m, n, k, i))
        for nu in range(n + 1):
            l1, r1, l2, r2 = we.moments(A.coeffs, B.coeffs, q, m, n, k, nu)
            if l1 != r1 or l2 != r2:
                bad.append(("moments", q, m, n, k, nu, i))
    checks.append((f"macwilliams oracle x{trials}", not bad, str(bad[:4])))
    return checks


def _suite_bounds(trials, seed):
    checks = []
    anchors = {(2, 2, 1): "b 3-4 A", (3, 2, 1): "b 4 B",
               (3, 3, 1): "a 11-32 C", (7, 7, 6): "a 2-16 C",
               (4, 4, 2): "b 10-64 C"}
    bad = [(cell, want, bd.format_report(bd.covering_report(2, *cell)))
           for cell, want in anchors.items()
           if bd.format_report(bd.covering_report(2, *cell)) != want]
    checks.append(("covering bound anchors", not bad, str(bad)))
    violations = []
    for m in range(2, 7):
        for n in range(2, m + 1):
            for rho in range(1, n):
                lows = bd.covering_lower(2, m, n, rho)
                ups = bd.covering_upper(2, m, n, rho)
                lvals = [v for v in lows.values() if v is not None]
                uvals = [v for v in ups.values() if v is not None]
                if max(lvals) > min(uvals):
                    violations.append((m, n, rho))
    checks.append(("lower bounds never exceed upper bounds",
                   not violations, str(violations)))
    dims_ok = (bd.linear_dim_bounds(2, 6, 6, 2) == (3, 4)
               and bd.linear_dim_bounds(2, 8, 8, 5) == (1, 3))
    checks.append(("linear dimension anchors", dims_ok, ""))
    return checks


def _suite_codes(trials, seed):
    checks = []
    bad = []
    for m in range(2, 5):
        F = make_field(2, m)
        for n in range(1, m + 1):
            g = tuple(2 ** i for i in range(n))
            for k in range(1, n + 1):
                code = cd.gabidulin(F, g, k)
                if cd.min_rank_distance(code) != n - k + 1:
                    bad.append(("distance", m, n, k))
                if not cd.mrd_els_check(code):
                    bad.append(("els", m, n, k))
    checks.append(("gabidulin codes are MRD", not bad, str(bad)))
    bad = []
    for i in range(min(trials, 10)):
        code = oc.random_linear_code(2, 3, 4, 2, seed=seed + i)
        dual = cd.dual(code)
        if dual.k != code.n - code.k:
            bad.append(("dim", i))
        if sorted(cd.codewords(cd.dual(dual))) != sorted(cd.codewords(code)):
            bad.append(("involution", i))
        for u in cd.codewords(code):
            if any(cd.dot(code.field, u, v) != 0 for v in dual.G):
                bad.append(("orthogonality", i))
                break
    checks.append(("dual codes orthogonal with complementary dimension",
                   not bad, str(bad)))
    zero = cd.make_zero_code(make_field(2, 2), 2)
    checks.append(("covering radius of the zero code",
                   cd.covering_radius(zero) == 2, ""))
    return checks


SUITES = {"geometry": _suite_geometry, "macwilliams": _suite_macwilliams,
          "bounds": _suite_bounds, "codes": _suite_codes}


def cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    failures = 0
    for name in names:
        for label, good, detail in SUITES[name](args.trials, args.seed):
            state = "ok" if good else "FAIL"
            suffix = f": {detail}" if detail and not good else ""
            print(f"{state} [{name}] {label}{suffix}")
            failures += not good
    if failures:
        print(f"{failures} check(s) failed")
        return 2
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_format(p, default="text", choices=("text", "json")):
    p.add_argument("--format", default=default, choices=choices)


def build_parser():
    top = argparse.ArgumentParser(
        prog="rankmetric",
        description="exact rank-metric coding computations")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="field summary")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--modulus")
    _add_format(p)
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("rank", help="rank weight / rank distance")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--modulus")
    p.add_argument("--vec", required=True)
    p.add_argument("--vec2")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("ball", help="sphere/ball sizes and bounds")
    for name in ("q", "m", "n", "r"):
        p.add_argument(f"--{name}", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_ball)

    p = sub.add_parser("els", help="elementary linear subspace counts")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--v", type=int)
    p.add_argument("--list", action="store_true")
    _add_format(p)
    p.set_defaults(func=cmd_els)

    p = sub.add_parser("code", help="inspect a code file")
    p.add_argument("--file", required=True)
    p.add_argument("--dual", action="store_true",
                   help="emit the dual code file instead of a summary")
    p.add_argument("--radius", action="store_true",
                   help="also compute the covering radius (guarded)")
    _add_format(p)
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("gabidulin", help="emit a Gabidulin code file")
    for name in ("q", "m", "n", "k"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--a", type=int, default=1,
                   help="Frobenius power parameter (coprime to m)")
    p.add_argument("--g", help="evaluation points (encodings)")
    p.add_argument("--check", action="store_true",
                   help="verify MRD properties; exit 2 on failure")
    p.set_defaults(func=cmd_gabidulin)

    p = sub.add_parser("bounds", help="covering bounds for one cell")
    for name in ("q", "m", "n", "rho"):
        p.add_argument(f"--{name}", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("table1", help="covering bound table (CSV/JSON)")
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--m", default="2..7")
    p.add_argument("--n", help="defaults to the m range")
    p.add_argument("--rho", default="1..6")
    p.add_argument("--workers", type=int)
    _add_format(p, default="csv", choices=("csv", "json"))
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("table2", help="linear dimension table (CSV/JSON)")
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--m", default="4..8")
    p.add_argument("--n", help="defaults to the m range")
    p.add_argument("--rho", default="2..6")
    _add_format(p, default="csv", choices=("csv", "json"))
    p.set_defaults(func=cmd_table2)

    p = sub.add_parser("macwilliams",
                       help="rank weight distribution of the dual")
    p.add_argument("--code", help="code file")
    p.add_argument("--dist", help="explicit distribution A_0,...,A_n")
    p.add_argument("--q", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--method", default="krawtchouk",
                   choices=("krawtchouk", "qproduct"))
    _add_format(p)
    p.set_defaults(func=cmd_macwilliams)

    p = sub.add_parser("moments", help="moment identities for a code file")
    p.add_argument("--code", required=True)
    _add_format(p)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("search", help="exhaustive/greedy/packing search")
    p.add_argument("--what", required=True,
                   choices=("covering", "greedy", "maxcode"))
    for name in ("q", "m", "n"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--rho", type=int)
    p.add_argument("--K", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--budget", type=int, help="search node budget")
    p.add_argument("--seed", type=int, default=0)
    _add_format(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("--suite", default="all",
                   choices=("all",) + tuple(SUITES))
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_verify)

    return top


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except oc.InconclusiveSearch as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return 3
    except (ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
