"""Classify the counterexamples to the coordinate-deletion lemmas.

For every violating ``(f, g, i)`` record ``#_f(i)`` and whether the blocks of
``f`` are intervals, to show where the statements break.
"""
from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass

from simpsep.checks import _admitted2_target, is_contiguous
from simpsep.gamma import count_or_zero, enumerate_gamma, leq, minus, upper_set


@dataclass
class Config:
    kmax: int = 2
    kpmax: int = 5
    show: int = 3


def scan(cfg: Config):
    first, second = Counter(), Counter()
    examples = {1: [], 2: []}
    for k in range(cfg.kmax + 1):
        for kp in range(max(k, 1), cfg.kpmax + 1):
            for f in enumerate_gamma(k, kp):
                for i in range(kp + 1):
                    fm = minus(f, i)
                    if fm is None:
                        continue
                    key = (count_or_zero(f, i), is_contiguous(f))
                    for g in upper_set(f):
                        gm = minus(g, i)
                        if gm is None or not leq(fm, gm):
                            first[key] += 1
                            examples[1].append((f, g, i))
                    if kp - 1 < k:
                        continue
                    for g in upper_set(fm):
                        targets = _admitted2_target(f, g, i)
                        if any(t is None for t in targets) or not any(leq(f, t) for t in targets):
                            second[key] += 1
                            examples[2].append((f, g, i))
    return first, second, examples


def main(cfg: Config) -> None:
    first, second, examples = scan(cfg)
    for label, counts, n in (("admitted1", first, 1), ("admitted2", second, 2)):
        print(f"{label}: {sum(counts.values())} violations")
        for (size, contiguous), c in sorted(counts.items()):
            print(f"  #_f(i)={size} contiguous={contiguous}: {c}")
        for f, g, i in examples[n][: cfg.show]:
            print(f"  e.g. f={f!r} g={g!r} i={i}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--kmax", type=int, default=Config.kmax)
    p.add_argument("--kpmax", type=int, default=Config.kpmax)
    args = p.parse_args()
    main(Config(kmax=args.kmax, kpmax=args.kpmax))
