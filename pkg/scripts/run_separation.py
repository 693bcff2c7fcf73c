"""Build, verify and probe separation certificates for a list of point pairs.

Certificates are written to ``results/`` as JSON.
"""
from __future__ import annotations

import argparse
import json
import random
import time
from dataclasses import dataclass, field
from pathlib import Path

from simpsep.cli import parse_point
from simpsep.separation import clear_memo, find_eta, probe_certificate, verify_certificate
from simpsep.sset import resolve


@dataclass
class Pair:
    sset: str
    p1: str
    p2: str


@dataclass
class Config:
    pairs: list[Pair] = field(default_factory=lambda: [
        Pair("boundary2", "e01:1/2,1/2", "e12:1/3,2/3"),
        Pair("delta1", "e01:1/3,2/3", "e01:2/3,1/3"),
        Pair("delta1", "e01:1/2,1/2", "e01:1/4,3/4"),
        Pair("delta1", "v0:1", "v1:1"),
    ])
    probes: int = 1000
    seed: int = 0
    out: Path = Path("results")


def main(cfg: Config) -> int:
    cfg.out.mkdir(exist_ok=True)
    failures = 0
    for pair in cfg.pairs:
        S = resolve(pair.sset)
        t0 = time.perf_counter()
        doc = find_eta(S, parse_point(S, pair.p1), parse_point(S, pair.p2)).to_json()
        t1 = time.perf_counter()
        clear_memo()
        ok, msg = verify_certificate(None, doc)
        t2 = time.perf_counter()
        reps = probe_certificate(S, doc, cfg.probes, random.Random(cfg.seed))
        common = sum(len(r.common) for r in reps)
        t3 = time.perf_counter()
        name = f"{pair.sset}_{pair.p1}_{pair.p2}".replace(":", "-").replace("/", "_").replace(",", "+")
        (cfg.out / f"{name}.json").write_text(json.dumps(doc, indent=1) + "\n")
        failures += (not ok) or common > 0
        print(f"{pair.sset} {pair.p1} | {pair.p2}: {doc['branch']}, N={doc['N']}, eta={doc['eta']}, "
              f"kmax={doc['kmax']}; {msg}; {cfg.probes} probes x {len(reps)} degrees, {common} common; "
              f"search {t1 - t0:.1f}s, verify {t2 - t1:.1f}s, probes {t3 - t2:.1f}s")
    return int(failures > 0)


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--probes", type=int, default=Config.probes)
    p.add_argument("--seed", type=int, default=Config.seed)
    args = p.parse_args()
    raise SystemExit(main(Config(probes=args.probes, seed=args.seed)))
