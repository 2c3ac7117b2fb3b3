"""``seqlab`` command line.

Exit codes: 0 when every check passed, 1 when the mathematical verdict is
negative (not realizable, a failed congruence, a mismatching fixture), 2 on
usage or contract errors.  JSON reports embed a run manifest and are rendered
with sorted keys, so identical invocations give byte-identical output.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from . import __version__
from .arith import primes_upto
from .congruences import (
    CLAIMS as CONGRUENCE_CLAIMS,
    default_grid,
    failures,
    read_grid_file,
    sweep_apery_family,
    sweep_binomial_congruences,
    sweep_cells,
    sweep_delannoy_family,
    sweep_osburn_sahu,
    sweep_sporadic,
)
from .errors import ContractError, NotRealizableError, SeqlabError
from .oeis import cross_check, fetch
from .realizability import check_realizable, fail_estimate, known_fail
from .realize import export_table, orbit_profile, build_map, verify_map, SIZE_LIMIT
from .sequences import REGISTRY, SequenceSpec, parse_spec
from .witness import CLAIMS as WITNESS_CLAIMS, claim_witness

SCHEMA_VERSION = 1
PASS, NEGATIVE, USAGE = 0, 1, 2


class UsageError(SeqlabError):
    code = "seqlab-cli/usage"


# manifest and rendering ------------------------------------------------------


def manifest(command, specs=(), N=None, grid=None, **config):
    body = {
        "command": command,
        "specs": [s.descriptor() if isinstance(s, SequenceSpec) else str(s) for s in specs],
        "N": N,
        "grid": grid,
        "config": config,
        "tool_version": __version__,
    }
    digest = hashlib.sha256(json.dumps(body, sort_keys=True).encode()).hexdigest()
    body["config_hash"] = digest
    return body


def render_json(man, status, result) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": man["command"],
        "manifest": man,
        "status": status,
        "result": result,
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def render_table(headers, rows) -> str:
    rows = [[str(c) for c in row] for row in rows]
    widths = [max([len(h)] + [len(r[i]) for r in rows]) for i, h in enumerate(headers)]
    line = lambda cells: "  ".join(c.rjust(w) for c, w in zip(cells, widths)).rstrip()
    out = [line(headers), line(["-" * w for w in widths])]
    out.extend(line(r) for r in rows)
    return "\n".join(out) + "\n"


def _status(ok):
    return "pass" if ok else "negative"


def _parse_range(text, spec):
    if text is None:
        return spec.offset, spec.offset + 9
    if ".." not in text:
        raise UsageError(f"range must look like 'start..stop', got {text!r}")
    a, b = text.split("..", 1)
    try:
        start, stop = int(a), int(b)
    except ValueError:
        raise UsageError(f"range must look like 'start..stop', got {text!r}") from None
    if stop < start:
        raise UsageError(f"empty range {text!r}")
    if start < spec.offset:
        raise UsageError(f"{spec.label} starts at n={spec.offset}")
    return start, stop


def _prime_list(text):
    try:
        primes = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--primes expects a comma-separated list, got {text!r}") from None
    return primes


# commands --------------------------------------------------------------------


def cmd_gen(args, out):
    spec = parse_spec(args.spec)
    start, stop = _parse_range(args.range, spec)
    values = spec.terms(start, stop)
    pairs = list(zip(range(start, stop + 1), values))
    if args.format == "bfile":
        out.write(f"# {spec.label} ({spec.descriptor()})\n")
        out.write("".join(f"{n} {v}\n" for n, v in pairs))
    elif args.format == "json":
        man = manifest("gen", [spec], grid={"start": start, "stop": stop})
        result = {"terms": [{"n": n, "value": str(v)} for n, v in pairs]}
        out.write(render_json(man, "pass", result))
    else:
        out.write(render_table(["n", "a(n)"], pairs))
    return PASS


def cmd_check(args, out):
    spec = parse_spec(args.spec)
    rep = check_realizable(spec, args.N)
    if args.format == "json":
        out.write(render_json(manifest("check", [spec], args.N), _status(rep.realizable),
                              rep.as_dict()))
    else:
        out.write(f"{spec.label} ({spec.descriptor()}), N={args.N}: {rep.verdict}\n")
        if rep.sign_failures:
            out.write(f"sign failures at n = {', '.join(map(str, rep.sign_failures[:20]))}"
                      f"{' ...' if len(rep.sign_failures) > 20 else ''}\n")
        if rep.dold_failures:
            out.write(render_table(["n", "n/gcd(n,g(n))"], rep.dold_failures[:40]))
            if len(rep.dold_failures) > 40:
                out.write(f"... {len(rep.dold_failures) - 40} more\n")
        out.write(f"Fail lower bound: {rep.fail_lower_bound}\n")
        for note in rep.notes:
            out.write(f"note: {note}\n")
    return PASS if rep.realizable else NEGATIVE


def cmd_fail(args, out):
    spec = parse_spec(args.spec)
    est = fail_estimate(spec, args.N)
    known = known_fail(spec)
    result = {
        "spec": spec.descriptor(),
        "name": spec.label,
        "N": args.N,
        "lower_bound": str(est.lower_bound),
        "certified_exact": est.certified_exact,
        "diverging": est.diverging,
        "known_fail": known,
    }
    ok = not est.sign_violated
    if args.format == "json":
        out.write(render_json(manifest("fail", [spec], args.N), _status(ok), result))
    else:
        tag = "certified exact" if est.certified_exact else "lower bound"
        if est.diverging:
            tag += ", lcm still growing"
        out.write(f"{spec.label}, N={args.N}: Fail >= {est.lower_bound} ({tag})\n")
    return PASS if ok else NEGATIVE


def _congruence_results(args):
    claim = args.claim
    if claim not in CONGRUENCE_CLAIMS:
        raise UsageError(f"unknown claim {claim!r}; choose from {', '.join(CONGRUENCE_CLAIMS)}")
    if CONGRUENCE_CLAIMS[claim][0] is None:
        primes = _prime_list(args.primes) if args.primes else (2, 3, 5, 7, 11)
        lift, div = sweep_binomial_congruences(args.max_n, primes)
        rows = lift if claim == "helou-terjanian" else div
        grid = {"max_n": args.max_n, "primes": list(primes)}
        return grid, [("n", "k", "p", "holds")], [(n, k, p, w.holds) for n, k, p, w in rows]
    if args.grid_file:
        cells = read_grid_file(Path(args.grid_file).read_text())
        grid = {"cells": [[c[0].descriptor(), c[1], c[2], c[3]] for c in cells]}
        return grid, None, sweep_cells(cells, claim, args.jobs)
    if not args.spec:
        raise UsageError(f"{claim} needs --spec or --grid-file")
    spec = parse_spec(args.spec)
    grid_kw = {}
    if args.primes:
        grid_kw["primes"] = _prime_list(args.primes)
    if claim == "A-mod-pm":
        if spec.family != "A":
            raise ContractError(f"{claim} needs an A-family spec")
        cells = default_grid(**grid_kw)
        results = sweep_apery_family(*spec.params, grid=cells, jobs=args.jobs)
    elif claim == "D-mod-pm":
        if spec.family != "D":
            raise ContractError(f"{claim} needs a D-family spec")
        cells = default_grid(**grid_kw)
        results = sweep_delannoy_family(*spec.params, grid=cells, jobs=args.jobs)
    elif claim == "D-mod-p3m":
        if spec.family != "D":
            raise ContractError(f"{claim} needs a D-family spec")
        cells = default_grid(**{"primes": (5, 7), "exponents": (1,), "ns": (1, 2, 3), **grid_kw})
        results = sweep_osburn_sahu(*spec.params, grid=cells, jobs=args.jobs)
    else:
        cells = default_grid(**{"primes": (3, 5, 7), "ns": (1, 2, 3), "cap": 150, **grid_kw})
        results = sweep_sporadic(spec, grid=cells, jobs=args.jobs)
    grid = {"spec": spec.descriptor(), "cells": [list(c) for c in cells]}
    return grid, None, results


def cmd_congruence(args, out):
    grid, binomial_headers, results = _congruence_results(args)
    if binomial_headers is not None:
        bad = [r for r in results if not r[3]]
        ok = not bad
        result = {"claim": args.claim, "cells": len(results),
                  "failures": [list(r[:3]) for r in bad]}
        text = f"{args.claim}: {len(results)} cells, {len(bad)} failures\n"
    else:
        bad = failures(results)
        ok = not bad
        result = {"claim": args.claim, "cells": len(results),
                  "failures": len(bad), "results": [r.as_dict() for r in results]}
        rows = [(r.spec.label, r.n, r.p, r.m, f"p^{r.modulus_exponent}",
                 "ok" if r.holds else "FAIL") for r in results]
        text = render_table(["spec", "n", "p", "m", "modulus", "holds"], rows)
        text += f"{args.claim}: {len(results)} cells, {len(bad)} failures\n"
    if args.format == "json":
        out.write(render_json(manifest("congruence", grid=grid, claim=args.claim),
                              _status(ok), result))
    else:
        out.write(text)
    return PASS if ok else NEGATIVE


def cmd_witness(args, out):
    if args.claim not in WITNESS_CLAIMS:
        raise UsageError(f"unknown witness claim {args.claim!r}; "
                         f"choose from {', '.join(WITNESS_CLAIMS)}")
    try:
        bound = int(args.primes)
    except ValueError:
        raise UsageError("witness --primes takes a prime bound, e.g. --primes 200") from None
    c = WITNESS_CLAIMS[args.claim]
    ws = [claim_witness(args.claim, p) for p in primes_upto(bound) if p >= c.min_prime]
    found = [w for w in ws if w.valid]
    ok = all(w.paths_agree for w in ws) and all(w.valid and w.matches_claim for w in ws)
    if c.expected(2) is None:
        # no fixed residue: the claim only lists primes where a witness exists
        ok = all(w.paths_agree for w in ws)
    result = {
        "claim": args.claim,
        "prime_bound": bound,
        "primes_tested": len(ws),
        "witnesses": [w.as_dict() for w in found],
        "count": len(found),
    }
    man = manifest("witness", [c.spec_name], grid={"prime_bound": bound}, claim=args.claim)
    if args.format == "json":
        out.write(render_json(man, _status(ok), result))
    else:
        rows = [(w.prime, w.index, w.residue, "-" if w.expected is None else w.expected,
                 "yes" if w.paths_agree else "NO") for w in ws]
        out.write(render_table(["p", "index", "residue", "expected", "paths agree"], rows))
        out.write(f"{args.claim}: {len(found)} witnesses among {len(ws)} primes <= {bound}\n")
    return PASS if ok else NEGATIVE


def cmd_realize(args, out):
    spec = parse_spec(args.spec)
    try:
        prof = orbit_profile(spec, args.N)
    except NotRealizableError as exc:
        out.write(f"{spec.label}: {exc}\n")
        return NEGATIVE
    fmap = build_map(prof, materialize=True, limit=args.limit)
    mismatches = verify_map(fmap, spec, args.N)
    if args.out:
        Path(args.out).write_text(export_table(fmap, args.N))
    ok = not mismatches
    result = {
        "spec": spec.descriptor(),
        "name": spec.label,
        "N": args.N,
        "points": fmap.size,
        "cycles": {str(k): v for k, v in sorted(fmap.cycles.items())},
        "mismatches": mismatches,
        "table": args.out,
    }
    if args.format == "json":
        out.write(render_json(manifest("realize", [spec], args.N), _status(ok), result))
    else:
        out.write(render_table(["period", "cycles"], sorted(fmap.cycles.items())))
        out.write(f"{spec.label}, N={args.N}: {fmap.size} points, self-verify "
                  f"{'pass' if ok else 'FAIL at ' + str(mismatches)}\n")
    return PASS if ok else NEGATIVE


def cmd_oeis_verify(args, out):
    if args.spec == "all":
        specs = [s for s in REGISTRY.values() if s.oeis is not None]
    else:
        specs = [parse_spec(args.spec)]
    checks = []
    for spec in specs:
        if spec.oeis is None:
            raise UsageError(f"{spec.label} has no OEIS link")
        bfile = fetch(spec.oeis.a_number, args.cache_dir, args.allow_network)
        checks.append((cross_check(spec, bfile, args.max_terms), bfile.source))
    ok = all(c.ok and c.compared >= min(args.max_terms, 30) for c, _ in checks)
    if args.format == "json":
        result = {"checks": [dict(c.as_dict(), source=src) for c, src in checks]}
        man = manifest("oeis-verify", specs, grid={"max_terms": args.max_terms})
        out.write(render_json(man, _status(ok), result))
    else:
        for c, src in checks:
            out.write(f"{c.describe()} [{src}]\n")
    return PASS if ok else NEGATIVE


# parser ----------------------------------------------------------------------


def _parents(formats=("table", "json")):
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=formats, default="table")
    common.add_argument("--jobs", type=int, default=None,
                        help="worker processes for sweeps (default: all cores)")
    return [common]


def build_parser():

    ap = argparse.ArgumentParser(prog="seqlab", description="Realizability toolkit for integer sequences.")
    ap.add_argument("--version", action="version", version=f"seqlab {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=_parents(("table", "json", "bfile")), help="print terms")
    p.add_argument("spec")
    p.add_argument("range", nargs="?", help="start..stop, inclusive")
    p.set_defaults(func=cmd_gen)

    for name, func, default_n, helptext in (
        ("check", cmd_check, 64, "realizability report for a(1..N)"),
        ("fail", cmd_fail, 64, "lower bound for Fail(a) from a(1..N)"),
    ):
        p = sub.add_parser(name, parents=_parents(), help=helptext)
        p.add_argument("spec")
        p.add_argument("--N", type=int, default=default_n)
        p.set_defaults(func=func)

    p = sub.add_parser("congruence", parents=_parents(), help="sweep a prime-power congruence")
    p.add_argument("claim", help=", ".join(CONGRUENCE_CLAIMS))
    p.add_argument("--spec")
    p.add_argument("--primes", help="comma-separated primes for the grid")
    p.add_argument("--grid-file", help="cells '<spec> n p m', one per line")
    p.add_argument("--max-n", type=int, default=60, help="range for the binomial claims")
    p.set_defaults(func=cmd_congruence)

    p = sub.add_parser("witness", parents=_parents(), help="prime witnesses up to a bound")
    p.add_argument("claim", help=", ".join(WITNESS_CLAIMS))
    p.add_argument("--primes", default="100", help="prime bound")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("realize", parents=_parents(), help="build and self-verify a realizing map")
    p.add_argument("spec")
    p.add_argument("--N", type=int, default=16)
    p.add_argument("--out", help="write the function table here")
    p.add_argument("--limit", type=int, default=SIZE_LIMIT, help="maximum number of points")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("oeis-verify", parents=_parents(), help="compare a generator with its b-file")
    p.add_argument("spec", help="registered name, or 'all'")
    p.add_argument("--max-terms", type=int, default=30)
    p.add_argument("--cache-dir")
    p.add_argument("--allow-network", action="store_true")
    p.set_defaults(func=cmd_oeis_verify)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if getattr(args, "N", 1) is not None and getattr(args, "N", 1) < 1:
        print("error[seqlab-cli/usage]: --N must be >= 1", file=sys.stderr)
        return USAGE
    try:
        return args.func(args, out)
    except SeqlabError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return USAGE
    except OSError as exc:
        print(f"error[seqlab-cli/io]: {exc}", file=sys.stderr)
        return USAGE


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
