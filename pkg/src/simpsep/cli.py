"""Command-line front end: ``simpsep {enum,check,separate,verify,validate-sset}``.

Exit codes: 0 success, 1 property or verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import checks
from .delta import enumerate_morphisms
from .gamma import enumerate_gamma, leq, poset, subset_leq
from .geometry import BaryPoint
from .rational import parse_rational
from .separation import (
    DEFAULT_DEPTH,
    SeparationError,
    find_eta,
    probe_certificate,
    verify_certificate,
)
from .sset import SSetError, load_json, nondeg, resolve

OK, FAIL, USAGE = 0, 1, 2
SEED_ENV = "SIMPSEP_SEED"


class UsageError(Exception):
    pass


def _seed(args) -> int:
    env = os.environ.get(SEED_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{SEED_ENV}={env!r} is not an integer")
    return args.seed


def _load_sset(spec: str):
    try:
        return resolve(spec)
    except FileNotFoundError:
        raise UsageError(f"no builtin complex or file named {spec!r}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"{spec}: not JSON ({exc})")


def _rational_arg(text: str, flag: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise UsageError(f"{flag}: {exc}")


def parse_point(S, text: str):
    """``cell-id:t0,t1,...`` with rational coordinates such as ``1/3``."""
    cell, sep, coords = text.partition(":")
    if not sep:
        raise UsageError(f"point {text!r} must look like cell:t0,t1,...")
    if cell not in S.degree_of:
        raise UsageError(f"unknown cell {cell!r}")
    try:
        t = BaryPoint(tuple(parse_rational(c.strip()) for c in coords.split(",")))
    except ValueError as exc:
        raise UsageError(f"point {text!r}: {exc}")
    d = S.degree_of[cell]
    if len(t) != d + 1:
        raise UsageError(f"cell {cell!r} has degree {d}, point has {len(t)} coordinates")
    return nondeg(cell, d), t


# ---------------------------------------------------------------------------


def cmd_enum(args, out) -> int:
    if args.kind == "delta":
        kind = "epi" if args.epi else "mono" if args.mono else "all"
        rows = enumerate_morphisms(args.k, args.kp, kind)
        for f in rows:
            print(" ".join(map(str, f.images)), file=out)
        print(f"# {len(rows)} {kind} morphisms [{args.k}] -> [{args.kp}]", file=out)
        return OK
    rows = enumerate_gamma(args.k, args.kp, onto_only=args.onto)
    for f in rows:
        print(_blocks(f), file=out)
    label = "onto" if args.onto else "all"
    print(f"# {len(rows)} {label} morphisms [{args.k}] => [{args.kp}]", file=out)
    if args.poset:
        P = poset(args.k, args.kp)
        for f, g in P.edge_list():
            print(f"edge {_blocks(f)} -> {_blocks(g)}", file=out)
        pairs = [(f, g) for f in P.elements for g in P.elements if f != g and leq(f, g)]
        for f, g in pairs:
            print(f"leq {_blocks(f)} <= {_blocks(g)}", file=out)
        strict = [(f, g) for f in P.elements for g in P.elements if subset_leq(f, g) and not leq(f, g)]
        for f, g in strict:
            print(f"subset-not-leq {_blocks(f)} {_blocks(g)}", file=out)
        print(f"# {len(P.edge_list())} edges, {len(pairs)} strict order pairs, "
              f"{len(strict)} blockwise pairs outside the order", file=out)
    return OK


def _blocks(f) -> str:
    return " ".join("{" + ",".join(map(str, b)) + "}" for b in f.blocks)


# ---------------------------------------------------------------------------

LEMMAS = (
    "duality", "order", "remark", "admitted1", "admitted2", "admitted3", "face-section",
    "degenlemma", "simpset", "uproperties", "distinct-cells", "same-cell", "compat",
)


def cmd_check(args, out) -> int:
    seed = _seed(args)
    reports = []
    lemma = args.lemma
    if lemma == "duality":
        reports.append(checks.check_duality(args.k, args.kp))
    elif lemma == "order":
        reports.append(checks.check_order(args.k, args.kp))
    elif lemma == "remark":
        found = checks.remark_witnesses(args.k, args.kp)
        rep = checks.CheckReport(f"remark[{args.k},{args.kp}]", cases=1)
        if not found:
            rep.fail("no blockwise pair outside the order")
        for f, g in found[:5]:
            print(f"witness {_blocks(f)} inside {_blocks(g)}, not below it", file=out)
        reports.append(rep)
    elif lemma == "admitted1":
        reports.append(checks.check_admitted1(args.k, args.kp, args.scope))
    elif lemma == "admitted2":
        reports.append(checks.check_admitted2(args.k, args.kp, args.scope))
    elif lemma == "admitted3":
        reports.append(checks.check_admitted3(args.k, args.kp))
    elif lemma == "face-section":
        reports.append(checks.check_face_section(args.k, args.kp))
    else:
        S = _load_sset(args.sset)
        if lemma == "degenlemma":
            reports.append(checks.check_degenlemma(S, N_max=args.N))
        elif lemma == "simpset":
            reports.append(checks.check_simpset(S))
        elif lemma == "uproperties":
            reports.append(checks.check_family_statements(S, 3 if args.N is None else args.N))
        elif lemma == "distinct-cells":
            reports.append(checks.check_distinct_cells(S))
        elif lemma == "same-cell":
            reports.append(checks.check_same_cell(S))
        elif lemma == "compat":
            eps = _rational_arg(args.eps, "--eps")
            if args.cell and args.cell not in S.degree_of:
                raise UsageError(f"unknown cell {args.cell!r}")
            cells = [nondeg(args.cell, S.degree_of[args.cell])] if args.cell else S.nondegenerate()
            for x in cells:
                reports += checks.compat_runs(S, x, eps, args.kmax, args.samples, seed, N=args.N)
    worst = OK
    for r in reports:
        print(r, file=out)
        if not r.ok:
            worst = FAIL
    total = sum(r.cases for r in reports)
    bad = sum(r.nviolations for r in reports)
    print(f"# {lemma}: {total} cases, {bad} violations", file=out)
    return worst


# ---------------------------------------------------------------------------


def cmd_separate(args, out) -> int:
    S = _load_sset(args.sset)
    p1, p2 = parse_point(S, args.p1), parse_point(S, args.p2)
    log = (lambda m: print(m, file=sys.stderr)) if args.verbose else None
    try:
        cert = find_eta(S, p1, p2, depth=args.depth, log=log, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc))
    except SeparationError as exc:
        print(f"separation failed: {exc}", file=out)
        return FAIL
    doc = cert.to_json()
    text = json.dumps(doc, indent=1) + "\n"
    if args.output in (None, "-"):
        out.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)
        print(f"certificate written to {args.output}: branch {doc['branch']}, "
              f"kmax {doc['kmax']}, eta {doc['eta']}", file=out)
    return OK


def cmd_verify(args, out) -> int:
    try:
        with open(args.cert) as fh:
            doc = json.load(fh)
    except FileNotFoundError:
        raise UsageError(f"no certificate at {args.cert!r}")
    except json.JSONDecodeError as exc:
        print(f"FAIL: certificate is not JSON ({exc})", file=out)
        return FAIL
    S = _load_sset(args.sset) if args.sset else None
    ok, msg = verify_certificate(S, doc)
    print(("OK: " if ok else "FAIL: ") + msg, file=out)
    if ok and args.probes:
        S = S or load_json(doc["complex"])
        rng = random.Random(_seed(args))
        common = 0
        for rep in probe_certificate(S, doc, args.probes, rng):
            common += len(rep.common)
            print(f"probe k={rep.k}: {rep.probes} probes, {rep.in_first} in U', "
                  f"{rep.in_second} in V', {len(rep.common)} in both", file=out)
        if common:
            print(f"FAIL: {common} probes lie in both neighborhoods", file=out)
            return FAIL
    return OK if ok else FAIL


def cmd_validate(args, out) -> int:
    try:
        with open(args.path) as fh:
            doc = json.load(fh)
    except FileNotFoundError:
        raise UsageError(f"no file {args.path!r}")
    except json.JSONDecodeError as exc:
        print(f"invalid: not JSON ({exc})", file=out)
        return FAIL
    try:
        S = load_json(doc)
    except SSetError as exc:
        print(f"invalid: {exc}", file=out)
        return FAIL
    counts = ", ".join(f"{len(S.cells.get(p, ()))} in degree {p}" for p in range(S.dim + 1))
    print(f"valid: dimension {S.dim}; non-degenerate cells: {counts}", file=out)
    return OK


# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="simpsep", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("enum", help="list morphisms of Delta or Gamma'")
    e.add_argument("kind", choices=("delta", "gamma"))
    e.add_argument("k", type=int)
    e.add_argument("kp", type=int)
    e.add_argument("--epi", action="store_true")
    e.add_argument("--mono", action="store_true")
    e.add_argument("--onto", action="store_true")
    e.add_argument("--poset", action="store_true", help="also print generating edges and the order")

    c = sub.add_parser("check", help="run an exhaustive or sampled verification")
    c.add_argument("lemma", choices=LEMMAS)
    c.add_argument("--k", type=int, default=2, help="largest domain degree (Gamma' checks)")
    c.add_argument("--kp", type=int, default=5, help="largest codomain degree (Gamma' checks)")
    c.add_argument("--scope", choices=checks.SCOPES, default="all")
    c.add_argument("--sset", default="delta1")
    c.add_argument("--cell", default=None)
    c.add_argument("--N", type=int, default=None)
    c.add_argument("--eps", default="1/2")
    c.add_argument("--kmax", type=int, default=3)
    c.add_argument("--samples", type=int, default=200)
    c.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("separate", help="build a separation certificate for two points")
    s.add_argument("sset")
    s.add_argument("p1")
    s.add_argument("p2")
    s.add_argument("-o", "--output", default=None)
    s.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    s.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    s.add_argument("-v", "--verbose", action="store_true")

    v = sub.add_parser("verify", help="re-derive every claim of a certificate")
    v.add_argument("cert")
    v.add_argument("--sset", default=None)
    v.add_argument("--probes", type=int, default=0, help="random probes per degree")
    v.add_argument("--seed", type=int, default=0)

    w = sub.add_parser("validate-sset", help="check a simplicial set JSON document")
    w.add_argument("path")
    return p


COMMANDS = {
    "enum": cmd_enum,
    "check": cmd_check,
    "separate": cmd_separate,
    "verify": cmd_verify,
    "validate-sset": cmd_validate,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"simpsep: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
