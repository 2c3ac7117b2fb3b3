"""One test per acceptance criterion; each prints a single PASS/FAIL line.

The lines are collected into an "acceptance criteria" section of the pytest
terminal summary, so ``pytest tests/test_acceptance.py`` shows all thirteen.
"""
import random
from fractions import Fraction
from itertools import product

import pytest

from seqlab.arith import (
    binomial_descent_check,
    helou_terjanian_check,
    kummer_valuation,
    legendre_binomial_valuation,
    primes_upto,
)
from seqlab.congruences import (
    failures,
    sweep_apery_family,
    sweep_delannoy_family,
    sweep_osburn_sahu,
    sweep_sporadic,
)
from seqlab.oeis import cross_check, fetch
from seqlab.realizability import (
    check_realizable,
    fail_estimate,
    first_dold_failure,
    growth_certificate,
    profile,
    puri_certificate,
    quartic_root,
)
from seqlab.realize import iterate_count, periodic_points, product_map, realize
from seqlab.sequences import REGISTRY, SPORADIC, SequenceSpec, parse_spec
from seqlab.witness import (
    bell_witness,
    catalan_witness,
    derangement_witness,
    genocchi_rational_residue,
    genocchi_witness,
    little_schroder_doubling,
    motzkin_witness,
    schroder_witness,
)

R = REGISTRY


def S(family, *params):
    return SequenceSpec(family, tuple(params))


def _not_realizable(specs, N):
    return [s.descriptor() for s in specs if not check_realizable(s, N).realizable]


def test_criterion_01_apery_family(criterion):
    specs = [S("A", r, s) for r, s in product((1, 2, 3), range(4))]
    bad = _not_realizable(specs, 128)
    criterion(1, not bad, f"A(n,r,s) realizable on N=128 for {len(specs)} (r,s); failing: {bad}")


def test_criterion_02_delannoy_family(criterion):
    specs = [S("D", r, s, t) for r, s, t in product((1, 2), range(3), range(3))]
    bad = _not_realizable(specs, 96)
    criterion(2, not bad, f"D(n,r,s,t) realizable on N=96 for {len(specs)} (r,s,t); failing: {bad}")


@pytest.mark.xfail(strict=True, reason=(
    "T(n,r,s,0,0) is not realizable: T(2)-T(1) = 3^s is odd, so 2 does not divide g(2); "
    "4 of the 16 grid cells have t = u = 0"))
def test_criterion_03_trinomial_family(criterion):
    specs = [S("T", r, s, t, u) for r, s, t, u in product((1, 2), (0, 1), (0, 1), (0, 1))]
    bad = _not_realizable(specs, 64)
    ratio_bad = [s.descriptor() for s in specs
                 if any(5 * s(n + 1) < 7 * s(n) for n in range(1, 64))]
    criterion(3, not bad and not ratio_bad,
              f"T(n,r,s,t,u) on N=64, {len(specs)} cells; not realizable: {bad}; "
              f"ratio 7/5 failing: {ratio_bad}")


def test_criterion_04_collapse_and_mixed_family(criterion):
    mismatches = []
    for n in range(65):
        for r, s in product((1, 2, 3), range(4)):
            if S("C", r, s, 0, 0)(n) != S("A", r, s)(n):
                mismatches.append(("C->A", n, r, s))
        for r, t, u in product((1, 2), range(3), range(3)):
            if S("C", r, 0, t, u)(n) != S("D", r, t, u)(n):
                mismatches.append(("C->D", n, r, t, u))
        for r, s, t, u in product((1, 2), (0, 1), (0, 1), (0, 1)):
            if S("V", r, 0, s, t, u)(n) != S("C", r, s, t, u)(n):
                mismatches.append(("V->C", n, r, s, t, u))
            if S("V", 0, r, s, t, u)(n) != S("T", r, s, t, u)(n):
                mismatches.append(("V->T", n, r, s, t, u))
    tuples = [(1, 1, 0, 0, 0), (2, 1, 1, 0, 1), (1, 2, 0, 1, 1)]
    v_specs = [S("V", *t) for t in tuples]
    bad = _not_realizable(v_specs, 48)
    small = [s.descriptor() for s in v_specs
             if any(profile(s, 48)[n] < n for n in range(1, 49))]
    ok = not mismatches and not bad and not small
    criterion(4, ok, f"collapse identities n<=64: {len(mismatches)} mismatches; "
                     f"V tuples {tuples} realizable on N=48: {not bad}; g(n)>=n: {not small}")


def test_criterion_05_binomial_witnesses(criterion):
    primes = primes_upto(200)
    odd = [p for p in primes if p > 2]
    bad = []
    for p in primes:
        w = catalan_witness(p)
        if not (w.residue == 1 and w.paths_agree):
            bad.append(("catalan", p))
    for p in odd:
        w = motzkin_witness(p)
        if not (w.index == 2 * p and w.residue == 1 and w.paths_agree):
            bad.append(("motzkin", p))
        w = schroder_witness(p)
        if not (w.residue == 2 and w.paths_agree):
            bad.append(("schroder", p))
        if not little_schroder_doubling(p):
            bad.append(("doubling", p))
    criterion(5, not bad, f"Catalan 1 at {len(primes)} primes, Motzkin 1 and Schroeder 2 at "
                          f"{len(odd)} odd primes <= 200, doubling audit; bad: {bad}")


def test_criterion_06_classical_negatives(criterion):
    bad = []
    for p in primes_upto(100):
        if bell_witness(p).residue != 1:
            bad.append(("bell", p))
        if p > 2 and derangement_witness(p).residue != p - 1:
            bad.append(("derangements", p))
        if 5 <= p <= 50:
            if not genocchi_rational_residue(p) == genocchi_witness(p).residue == p - 1:
                bad.append(("genocchi", p))
    criterion(6, not bad, "Bell 1 (p<=100), derangements -1 (odd p<=100), "
                          f"Genocchi -1 from exact B_2p (5<=p<=50); bad: {bad}")


def test_criterion_07_fail_anchors(criterion):
    fib = fail_estimate(R["fib-squares"], 40)
    lucas = fail_estimate(R["lucas"], 100)
    small = [check_realizable(parse_spec(f"stirling2:k={k}"), 64).realizable for k in (1, 2)]
    divides = {}
    for k in (3, 4, 5, 6):
        fact = 1
        for j in range(1, k):
            fact *= j
        bound = fail_estimate(parse_spec(f"stirling2:k={k}"), 40).lower_bound
        divides[k] = (bound, fact % bound == 0)
    ok = (fib.lower_bound == 5 and fib.certified_exact and lucas.lower_bound == 1
          and all(small) and all(d for _, d in divides.values()))
    criterion(7, ok, f"Fail(F_n^2) >= {fib.lower_bound} certified={fib.certified_exact}; "
                     f"Lucas {lucas.lower_bound}; S2 k=1,2 realizable {small}; "
                     f"S2 bounds {{k: (bound, divides (k-1)!)}} = {divides}")


def test_criterion_08_congruence_sweeps(criterion):
    cells = 0
    bad = []
    for r, s in product((1, 2, 3), range(4)):
        res = sweep_apery_family(r, s, jobs=1)
        cells += len(res)
        bad += failures(res)
    for r, s, t in product((1, 2), range(3), range(3)):
        res = sweep_delannoy_family(r, s, t, jobs=1)
        cells += len(res)
        bad += failures(res)
    for name in SPORADIC:
        res = sweep_sporadic(name, jobs=1)
        cells += len(res)
        bad += failures(res)
    for r in (2, 3):
        res = sweep_osburn_sahu(r, 1, 1, jobs=1)
        cells += len(res)
        bad += failures(res)
    domb = R["domb"]
    anchor = domb(5) - domb(1)
    ok = not bad and anchor == 31500 and anchor % 125 == 0
    criterion(8, ok, f"{cells} congruence cells, {len(bad)} failures; "
                     f"Domb(5)-Domb(1) = {anchor} = {anchor // 125}*125")


def test_criterion_09_partitions(criterion):
    part = R["partitions"]
    puri_522 = all(part(2 * n) >= n * part(n) for n in range(1, 523))
    puri_1000 = bool(puri_certificate(part, 2000))
    sign = check_realizable(part, 2000).sign_failures == ()
    first = first_dold_failure(part, 2000)
    ok = puri_522 and puri_1000 and sign and first is not None
    criterion(9, ok, f"p(2n)>=n p(n) for n<=522: {puri_522}, n<=1000: {puri_1000}; "
                     f"sign for n<=2000: {sign}; smallest Dold failure n = {first}")


def test_criterion_10_binomial_valuations(criterion):
    rng = random.Random(1000)
    primes = primes_upto(50)
    mism = 0
    for _ in range(1000):
        n = rng.randint(0, 2000)
        m = rng.randint(0, n)
        p = rng.choice(primes)
        if kummer_valuation(n, m, p).value != legendre_binomial_valuation(n, m, p):
            mism += 1
    binomial = 0
    cells = 0
    for p in (2, 3, 5, 7, 11):
        for n in range(61):
            for m in range(n + 1):
                cells += 1
                binomial += not helou_terjanian_check(n, m, p).holds
        for n in range(0, 61, p):
            for lam in range(n // p + 2):
                cells += 1
                binomial += not binomial_descent_check(n, lam, p).holds
    criterion(10, mism == 0 and binomial == 0,
              f"Kummer vs Legendre on 1000 triples: {mism} mismatches; "
              f"binomial congruences: {binomial} failures in {cells} cells")


def test_criterion_11_realizing_maps(criterion):
    bad = []
    for spec in (R["lucas"], R["mersenne"], R["sigma1"], S("A", 1, 0)):
        fmap = realize(spec, 16)
        for n in range(1, 17):
            if iterate_count(fmap, n) != spec(n):
                bad.append((spec.label, n))
    prod = product_map(realize(R["powers2"], 12, materialize=False),
                       realize(R["zagier"], 12, materialize=False))
    clf_ok = [periodic_points(prod, n) for n in range(1, 13)] == R["clf"].terms(1, 12)
    raw = product_map(realize(R["powers2"], 6), realize(R["zagier"], 6))
    raw_ok = [iterate_count(raw, n) for n in range(1, 7)] == R["clf"].terms(1, 6)
    criterion(11, not bad and clf_ok and raw_ok,
              f"raw-iteration round trips N=16 mismatches: {bad}; product map = P(n) "
              f"for n<=12 (cycle type): {clf_ok}, n<=6 (raw iteration, {raw.size} points): {raw_ok}")


def test_criterion_12_growth_constant(criterion):
    x = quartic_root()
    root_ok = f"{float(x):.6f}" == "1.220744" and Fraction(1221, 1000) > x
    granted = 0
    unsound = []
    specs = list(R.values()) + [S("T", r, s, t, u) for r, s, t, u in
                                product((1, 2), (0, 1), (0, 1), (0, 1))]
    for spec in specs:
        if growth_certificate(spec, 64, 2):
            granted += 1
            if check_realizable(spec, 64).sign_failures:
                unsound.append(spec.label)
    criterion(12, root_ok and not unsound,
              f"root of x^4=x+1: {float(x):.9f}; {granted} growth certificates at C=2, "
              f"unsound: {unsound}")


def test_criterion_13_oeis_fixtures(criterion):
    checks = [cross_check(s, fetch(s.oeis.a_number), 30) for s in R.values() if s.oeis]
    bad = [c.describe() for c in checks if not (c.ok and c.compared >= 30)]
    criterion(13, not bad, f"{len(checks)} (spec, A-number) pairs match bundled fixtures "
                           f"for >= 30 terms offline; bad: {bad}")
