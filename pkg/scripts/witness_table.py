#!/usr/bin/env python3
"""Tabulate prime witnesses (mu * a)(index(p)) mod p for every registered claim.

Writes CSV to stdout: claim, p, index, residue, expected, paths_agree.
"""
import argparse
import csv
import sys
from dataclasses import dataclass

from seqlab.arith import primes_upto
from seqlab.witness import CLAIMS, claim_witness


@dataclass
class TableConfig:
    bound: int = 200
    claims: tuple = tuple(CLAIMS)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bound", type=int, default=TableConfig.bound)
    ap.add_argument("--claims", nargs="*", default=list(TableConfig.claims), choices=list(CLAIMS))
    args = ap.parse_args()
    cfg = TableConfig(args.bound, tuple(args.claims))

    out = csv.writer(sys.stdout)
    out.writerow(["claim", "p", "index", "residue", "expected", "paths_agree"])
    for claim in cfg.claims:
        for p in primes_upto(cfg.bound):
            if p < CLAIMS[claim].min_prime:
                continue
            w = claim_witness(claim, p)
            out.writerow([claim, p, w.index, w.residue,
                          "" if w.expected is None else w.expected, w.paths_agree])


if __name__ == "__main__":
    main()
