"""Run every exhaustive and sampled check with one configuration and print a table."""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, fields
from fractions import Fraction

from simpsep import checks
from simpsep.sset import BUILTIN, nondeg


@dataclass
class Config:
    kmax: int = 2
    kpmax: int = 5
    complexes: tuple[str, ...] = ("delta1", "delta2", "boundary2")
    family_N: int = 3
    compat_kmax: int = 4
    samples: int = 200
    seed: int = 0
    eps: tuple[str, ...] = ("1/2", "1/4")


def main(cfg: Config) -> int:
    rows = []

    def run(label, fn, *args, **kw):
        t0 = time.perf_counter()
        rep = fn(*args, **kw)
        rows.append((label, rep.cases, rep.nviolations, time.perf_counter() - t0))

    run("duality", checks.check_duality, cfg.kmax, cfg.kpmax)
    run("order", checks.check_order, cfg.kmax, cfg.kpmax)
    for scope in checks.SCOPES:
        run(f"admitted1[{scope}]", checks.check_admitted1, cfg.kmax, cfg.kpmax, scope)
        run(f"admitted2[{scope}]", checks.check_admitted2, cfg.kmax, cfg.kpmax, scope)
    run("admitted3", checks.check_admitted3, cfg.kmax, cfg.kpmax)
    run("face-section", checks.check_face_section, cfg.kmax, cfg.kpmax)
    for name in cfg.complexes:
        S = BUILTIN[name]()
        run(f"degenlemma {name}", checks.check_degenlemma, S)
        run(f"simpset {name}", checks.check_simpset, S)
        run(f"distinct-cells {name}", checks.check_distinct_cells, S)
        run(f"same-cell {name}", checks.check_same_cell, S)
        run(f"uproperties {name} N={cfg.family_N}", checks.check_family_statements, S, cfg.family_N)
        for x in S.nondegenerate():
            if x.degree == 0 and S.dim > 0:
                continue
            for e in cfg.eps:
                t0 = time.perf_counter()
                reps = checks.compat_runs(S, x, Fraction(e), cfg.compat_kmax, cfg.samples, cfg.seed)
                rows.append((f"compat {name}/{x!r} eps={e}", sum(r.cases for r in reps),
                             sum(r.nviolations for r in reps), time.perf_counter() - t0))
    width = max(len(r[0]) for r in rows)
    for label, cases, bad, dt in rows:
        print(f"{label:<{width}}  {cases:>8} cases  {bad:>5} violations  {dt:7.2f}s")
    return int(any(r[2] for r in rows))


def parse() -> Config:
    p = argparse.ArgumentParser(description=__doc__)
    for f in fields(Config):
        if f.type in ("int", int):
            p.add_argument(f"--{f.name.replace('_', '-')}", type=int, default=f.default)
    return Config(**vars(p.parse_args()))


if __name__ == "__main__":
    raise SystemExit(main(parse()))
