#!/usr/bin/env python3
"""Probe the partition numbers p(n) against the realizability conditions.

Checks p(2n) >= n p(n), the sign condition for mu * p, and lists where the
Dold condition n | (mu * p)(n) fails.  The smallest failures and the share of
failing n are printed; nothing here decides whether p(n) is almost realizable.
"""
import argparse
from dataclasses import dataclass

from seqlab.realizability import check_realizable, puri_certificate
from seqlab.sequences import REGISTRY


@dataclass
class ProbeConfig:
    N: int = 2000
    puri: int = 1000
    show: int = 25


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--N", type=int, default=ProbeConfig.N)
    ap.add_argument("--puri", type=int, default=ProbeConfig.puri)
    ap.add_argument("--show", type=int, default=ProbeConfig.show)
    cfg = ProbeConfig(**vars(ap.parse_args()))

    part = REGISTRY["partitions"]
    cert = puri_certificate(part, 2 * cfg.puri)
    print(f"p(2n) >= n p(n) for 1 <= n <= {cfg.puri}: {bool(cert)}"
          + ("" if cert else f" (first violation n={cert.violation})"))

    # any n in range where the inequality fails
    small = [n for n in range(1, cfg.puri + 1) if part(2 * n) < n * part(n)]
    print(f"n with p(2n) < n p(n): {small if small else 'none'}")

    rep = check_realizable(part, cfg.N)
    print(f"sign condition for n <= {cfg.N}: {'holds' if not rep.sign_failures else rep.sign_failures}")
    fails = [n for n, _ in rep.dold_failures]
    print(f"Dold failures for n <= {cfg.N}: {len(fails)} of {cfg.N} "
          f"({100 * len(fails) / cfg.N:.1f}%)")
    print(f"smallest: {fails[:cfg.show]}")
    ok = [n for n in range(1, cfg.N + 1) if n not in set(fails)]
    print(f"n > 1 where n divides (mu * p)(n): {ok[1:cfg.show + 1]}")


if __name__ == "__main__":
    main()
