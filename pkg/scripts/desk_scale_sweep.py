#!/usr/bin/env python3
"""Realizability of the binomial-sum families on parameter grids.

Runs check_realizable over the A, D, T, C and V grids, reports failing cells
with their first Dold failure and lower bound for Fail, and optionally dumps
everything as JSON.

    python scripts/desk_scale_sweep.py --out sweep.json
"""
import argparse
import json
import time
from dataclasses import asdict, dataclass
from itertools import product

from seqlab.realizability import check_realizable
from seqlab.sequences import SequenceSpec


@dataclass
class SweepConfig:
    n_a: int = 128
    n_d: int = 96
    n_t: int = 64
    n_c: int = 48
    n_v: int = 32
    max_r: int = 3
    max_exp: int = 2
    out: str | None = None


def grids(cfg):
    rs = range(1, cfg.max_r + 1)
    ex = range(cfg.max_exp + 1)
    yield "A", cfg.n_a, [(r, s) for r, s in product(rs, range(cfg.max_exp + 2))]
    yield "D", cfg.n_d, list(product(rs, ex, ex))
    yield "T", cfg.n_t, list(product(rs, ex, ex, ex))
    yield "C", cfg.n_c, list(product(rs, ex, ex, ex))
    r12 = [(a, b) for a, b in product(range(cfg.max_r + 1), repeat=2) if a + b]
    yield "V", cfg.n_v, [(a, b, s, t, u) for (a, b), s, t, u in product(r12, ex, ex, ex)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, val in asdict(SweepConfig()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=type(val) if val is not None else str,
                        default=val)
    cfg = SweepConfig(**vars(ap.parse_args()))

    rows = []
    for family, N, params in grids(cfg):
        t0 = time.perf_counter()
        failing = []
        for p in params:
            rep = check_realizable(SequenceSpec(family, p), N)
            if not rep.realizable:
                first = rep.sign_failures[:1] or rep.dold_failures[0][:1]
                failing.append({"params": p, "verdict": rep.verdict, "first": first[0],
                                "fail_lower_bound": str(rep.fail_lower_bound)})
        dt = time.perf_counter() - t0
        print(f"{family}  N={N:<4d} cells={len(params):<4d} failing={len(failing):<3d} {dt:6.2f}s")
        for f in failing:
            print(f"    {family}{f['params']}: {f['verdict']} at n={f['first']}, "
                  f"Fail >= {f['fail_lower_bound']}")
        rows.append({"family": family, "N": N, "cells": len(params), "failing": failing,
                     "seconds": round(dt, 3)})
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump({"config": asdict(cfg), "families": rows}, fh, indent=2, default=list)


if __name__ == "__main__":
    main()
