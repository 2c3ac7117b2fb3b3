"""Sweeps of the prime-power congruences a(n p^m) == a(n p^(m-1)) for the
binomial-sum families, at modulus p^m and at the supercongruence moduli
p^{2m} (sporadic Apery-like sequences) and p^{3m} (Osburn-Sahu range).

Every claim swept here is a theorem; a failing cell means a generator bug.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product

from .arith import CongruenceWitness, binomial_descent_check, helou_terjanian_check, is_prime
from .errors import ContractError
from .sequences import REGISTRY, SPORADIC, SequenceSpec, parse_spec

# claim id -> (exponent multiplier, human description)
CLAIMS = {
    "A-mod-pm": (1, "A(np^m,r,s) == A(np^(m-1),r,s) mod p^m"),
    "sporadic-mod-p2m": (2, "V(np^m) == V(np^(m-1)) mod p^(2m), p >= 3"),
    "D-mod-pm": (1, "D(np^m,r,s,t) == D(np^(m-1),r,s,t) mod p^m"),
    "D-mod-p3m": (3, "D(np^m,r,s,t) == D(np^(m-1),r,s,t) mod p^(3m), r >= 2, s,t >= 1, p >= 5"),
    "helou-terjanian": (None, "C(np,mp) == C(n,m) at the Helou-Terjanian modulus"),
    "binom-descent": (None, "C(n,lp) == C(n/p,l) mod p^max(nu_p(n), nu_p(n-lp))"),
}

DEFAULT_PRIMES = (2, 3, 5, 7, 11)
DEFAULT_EXPONENTS = (1, 2)
DEFAULT_NS = (1, 2, 3, 4, 5)
DEFAULT_CAP = 200


@dataclass(frozen=True)
class CongruenceResult:
    spec: SequenceSpec
    n: int
    p: int
    m: int
    modulus_exponent: int
    witness: CongruenceWitness
    claim: str

    @property
    def holds(self) -> bool:
        return self.witness.holds

    def as_dict(self) -> dict:
        return {
            "claim": self.claim,
            "spec": self.spec.descriptor(),
            "n": self.n,
            "p": self.p,
            "m": self.m,
            "modulus_exponent": self.modulus_exponent,
            "witness": self.witness.as_dict(),
        }


def default_grid(primes=DEFAULT_PRIMES, exponents=DEFAULT_EXPONENTS, ns=DEFAULT_NS,
                 cap=DEFAULT_CAP):
    return [
        (n, p, m)
        for p, m, n in product(primes, exponents, ns)
        if n * p**m <= cap
    ]


def read_grid_file(text: str):
    """Parse grid cells, one per line: ``<spec> <n> <p> <m>``; '#' starts a comment."""
    cells = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 4:
            raise ContractError(f"grid line {lineno}: expected '<spec> n p m', got {line!r}")
        try:
            n, p, m = (int(x) for x in parts[1:])
        except ValueError:
            raise ContractError(f"grid line {lineno}: non-integer cell {line!r}") from None
        cells.append((parse_spec(parts[0]), n, p, m))
    return cells


def _check_cell(n, p, m):
    if n < 1:
        raise ContractError(f"n must be >= 1, got {n}")
    if m < 1:
        raise ContractError(f"m must be >= 1, got {m}")
    if not is_prime(p):
        raise ContractError(f"{p} is not prime")


def congruence_cell(spec: SequenceSpec, n: int, p: int, m: int, multiplier: int,
                    claim: str) -> CongruenceResult:
    _check_cell(n, p, m)
    exponent = multiplier * m
    witness = CongruenceWitness(spec(n * p**m), spec(n * p ** (m - 1)), p**exponent)
    return CongruenceResult(spec, n, p, m, exponent, witness, claim)


def _run_cells(tasks, jobs):
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs <= 1 or len(tasks) < 2:
        return [congruence_cell(*t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_cell_star, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    return results


def _cell_star(task):
    return congruence_cell(*task)


def _require(cond, message):
    if not cond:
        raise ContractError(message)


def sweep_apery_family(r: int, s: int, grid=None, jobs=1) -> list[CongruenceResult]:
    """A(np^m, r, s) == A(np^(m-1), r, s) mod p^m over the grid."""
    spec = SequenceSpec("A", (r, s))
    grid = default_grid() if grid is None else grid
    return _run_cells([(spec, n, p, m, 1, "A-mod-pm") for n, p, m in grid], jobs)


def sweep_delannoy_family(r: int, s: int, t: int, grid=None, jobs=1) -> list[CongruenceResult]:
    """D(np^m, r, s, t) == D(np^(m-1), r, s, t) mod p^m over the grid."""
    spec = SequenceSpec("D", (r, s, t))
    grid = default_grid() if grid is None else grid
    return _run_cells([(spec, n, p, m, 1, "D-mod-pm") for n, p, m in grid], jobs)


def sweep_sporadic(spec, grid=None, jobs=1) -> list[CongruenceResult]:
    """The p^{2m} supercongruence for one of the seven registered sporadic sequences."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    registered = {REGISTRY[name] for name in SPORADIC}
    _require(spec in registered, f"{spec.label} is not a registered sporadic sequence")
    if grid is None:
        grid = default_grid(primes=(3, 5, 7), ns=(1, 2, 3), cap=150)
    for _, p, _ in grid:
        _require(p >= 3, f"sporadic supercongruence needs p >= 3, got {p}")
    return _run_cells([(spec, n, p, m, 2, "sporadic-mod-p2m") for n, p, m in grid], jobs)


def sweep_osburn_sahu(r: int, s: int, t: int, grid=None, jobs=1) -> list[CongruenceResult]:
    """D(np^m, r, s, t) == D(np^(m-1), r, s, t) mod p^{3m} for r >= 2, s, t >= 1, p >= 5."""
    _require(r >= 2, f"need r >= 2, got {r}")
    _require(s >= 1 and t >= 1, f"need s, t >= 1, got s={s}, t={t}")
    if grid is None:
        grid = default_grid(primes=(5, 7), exponents=(1,), ns=(1, 2, 3))
    for _, p, _ in grid:
        _require(p >= 5, f"p^(3m) supercongruence needs p >= 5, got {p}")
    spec = SequenceSpec("D", (r, s, t))
    return _run_cells([(spec, n, p, m, 3, "D-mod-p3m") for n, p, m in grid], jobs)


def sweep_cells(cells, claim: str, jobs=1) -> list[CongruenceResult]:
    """Run explicit (spec, n, p, m) cells, e.g. from :func:`read_grid_file`."""
    if claim not in CLAIMS or CLAIMS[claim][0] is None:
        raise ContractError(f"unknown sequence claim {claim!r}")
    mult = CLAIMS[claim][0]
    for spec, _, p, _ in cells:
        if claim == "A-mod-pm":
            _require(spec.family == "A", f"{claim} needs an A-family spec")
        elif claim in ("D-mod-pm", "D-mod-p3m"):
            _require(spec.family == "D", f"{claim} needs a D-family spec")
            if claim == "D-mod-p3m":
                r, s, t = spec.params
                _require(r >= 2 and s >= 1 and t >= 1 and p >= 5,
                         f"{claim} contract violated by {spec.descriptor()} at p={p}")
        elif claim == "sporadic-mod-p2m":
            registered = {REGISTRY[name] for name in SPORADIC}
            _require(spec in registered and p >= 3, f"{claim} contract violated by {spec.label}")
    return _run_cells([(spec, n, p, m, mult, claim) for spec, n, p, m in cells], jobs)


def sweep_binomial_congruences(max_n=60, primes=DEFAULT_PRIMES):
    """Exhaustive Helou-Terjanian and divisible-top-index checks for n <= max_n."""
    lift = [
        (n, m, p, helou_terjanian_check(n, m, p))
        for p in primes
        for n in range(max_n + 1)
        for m in range(n + 1)
    ]
    div = [
        (n, lam, p, binomial_descent_check(n, lam, p))
        for p in primes
        for n in range(0, max_n + 1, p)
        for lam in range(n // p + 2)
    ]
    return lift, div


def failures(results):
    return [r for r in results if not r.holds]
