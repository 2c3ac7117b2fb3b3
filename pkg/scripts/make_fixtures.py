#!/usr/bin/env python3
"""Write the bundled b-file fixtures under src/seqlab/fixtures/.

The sandbox this package was built in has no route to oeis.org, so the
fixtures are produced from sources that share no code with seqlab's
generators: sympy's combinatorial functions, the holonomic recurrences
published on the OEIS entries, and direct polynomial expansion.  A handful of
leading terms copied from the OEIS pages anchor each recurrence.

Run with ``python scripts/make_fixtures.py``; pass ``--check`` to compare
against the committed files instead of writing.
"""
import argparse
import sys
from fractions import Fraction
from pathlib import Path

import sympy
from sympy.functions.combinatorial.numbers import bell, bernoulli, catalan, euler, fibonacci, lucas
from sympy.functions.combinatorial.numbers import partition, subfactorial

OUT = Path(__file__).resolve().parent.parent / "src" / "seqlab" / "fixtures"
TERMS = 60


def recurrence(init, step, count):
    """u(n) = step(n, u) / leading(n) with an exactness check."""
    u = list(init)
    while len(u) < count:
        n = len(u)
        num, den = step(n, u)
        q, r = divmod(num, den)
        if r:
            raise SystemExit(f"recurrence not integral at n={n}")
        u.append(q)
    return u


def poly_coeff(base, n, k):
    poly = sympy.Poly(sympy.Symbol("x") ** 0, sympy.Symbol("x"))
    x = sympy.Symbol("x")
    poly = sympy.Poly(base(x), x) ** n
    return int(poly.coeff_monomial(x**k))


def genocchi_signed(count):
    # e.g.f. 2t/(e^t+1): 2 G_j = -sum_{i<j} C(j,i) G_i for j >= 2
    G = [Fraction(0), Fraction(1)]
    for j in range(2, count):
        G.append(-sum(sympy.binomial(j, i) * G[i] for i in range(j)) / 2)
    return [int(g) for g in G]


def build():
    T = TERMS
    data = {}
    data["A000225"] = (0, [2**n - 1 for n in range(T)])
    data["A062510"] = (0, [2**n - (-1) ** n for n in range(T)])
    data["A000032"] = (0, [int(lucas(n)) for n in range(T)])
    data["A000045"] = (0, [int(fibonacci(n)) for n in range(T)])
    data["A054783"] = (0, [int(fibonacci(n * n)) for n in range(T)])
    data["A122045"] = (0, [int(euler(n)) for n in range(2 * T + 2)])
    data["A000364"] = (0, [abs(int(euler(2 * n))) for n in range(T)])
    data["A002445"] = (0, [int(bernoulli(2 * n).q) for n in range(T)])
    data["A001067"] = (1, [int((bernoulli(2 * n) / (2 * n)).p) for n in range(1, T + 1)])
    data["A006953"] = (1, [int((bernoulli(2 * n) / (2 * n)).q) for n in range(1, T + 1)])
    data["A226158"] = (0, genocchi_signed(2 * T + 2))
    data["A000110"] = (0, [int(bell(n)) for n in range(T)])
    data["A000166"] = (0, [int(subfactorial(n)) for n in range(T)])
    data["A000041"] = (0, [int(partition(n)) for n in range(2 * T)])
    data["A000108"] = (0, [int(catalan(n)) for n in range(T)])
    data["A000984"] = (0, [int(sympy.binomial(2 * n, n)) for n in range(T)])
    data["A005259"] = (0, recurrence(
        [1, 5],
        lambda n, u: ((34 * n**3 - 51 * n**2 + 27 * n - 5) * u[n - 1] - (n - 1) ** 3 * u[n - 2], n**3),
        T))
    data["A005258"] = (0, recurrence(
        [1, 3],
        lambda n, u: ((11 * n**2 - 11 * n + 3) * u[n - 1] + (n - 1) ** 2 * u[n - 2], n**2),
        T))
    data["A001850"] = (0, recurrence(
        [1, 3], lambda n, u: (3 * (2 * n - 1) * u[n - 1] - (n - 1) * u[n - 2], n), T))
    data["A000172"] = (0, recurrence(
        [1, 2],
        lambda n, u: ((7 * (n - 1) ** 2 + 7 * (n - 1) + 2) * u[n - 1] + 8 * (n - 1) ** 2 * u[n - 2], n**2),
        T))
    data["A005260"] = (0, recurrence(
        [1, 2],
        lambda n, u: (2 * (2 * n - 1) * (3 * (n - 1) ** 2 + 3 * (n - 1) + 1) * u[n - 1]
                      + 4 * (n - 1) * (4 * n - 5) * (4 * n - 3) * u[n - 2], n**3),
        T))
    data["A002895"] = (0, recurrence(
        [1, 4],
        lambda n, u: (2 * (2 * n - 1) * (5 * n**2 - 5 * n + 2) * u[n - 1] - 64 * (n - 1) ** 3 * u[n - 2], n**3),
        T))
    data["A053175"] = (0, recurrence(
        [1, 8],
        lambda n, u: (8 * (3 * (n - 1) ** 2 + 3 * (n - 1) + 1) * u[n - 1] - 128 * (n - 1) ** 2 * u[n - 2], n**2),
        T))
    data["A081085"] = (0, recurrence(
        [1, 4],
        lambda n, u: (4 * (3 * (n - 1) ** 2 + 3 * (n - 1) + 1) * u[n - 1] - 32 * (n - 1) ** 2 * u[n - 2], n**2),
        T))
    data["A002893"] = (0, recurrence(
        [1, 3],
        lambda n, u: ((10 * n**2 - 10 * n + 3) * u[n - 1] - 9 * (n - 1) ** 2 * u[n - 2], n**2),
        T))
    data["A002426"] = (0, [poly_coeff(lambda x: x**2 + x + 1, n, n) for n in range(T)])
    data["A005725"] = (0, [poly_coeff(lambda x: 1 + x + x**2 + x**3, n, n) for n in range(T)])
    data["A001006"] = (0, recurrence(
        [1, 1], lambda n, u: ((2 * n + 1) * u[n - 1] + 3 * (n - 1) * u[n - 2], n + 2), T))
    data["A006318"] = (0, recurrence(
        [1, 2], lambda n, u: (3 * (2 * n - 1) * u[n - 1] - (n - 2) * u[n - 2], n + 1), T))
    data["A001003"] = (0, recurrence(
        [1, 1, 3], lambda n, u: (3 * (2 * n - 1) * u[n - 1] - (n - 2) * u[n - 2], n + 1), T))
    tri = []
    for n in range(1, 16):
        for k in range(1, n + 1):
            tri.append(int(sympy.binomial(n, k) * sympy.binomial(n, k - 1) / n))
    data["A001263"] = (1, tri)
    return data


ANCHORS = {
    "A005259": [1, 5, 73, 1445, 33001, 819005, 21460825],
    "A005258": [1, 3, 19, 147, 1251, 11253, 104959],
    "A001850": [1, 3, 13, 63, 321, 1683, 8989],
    "A000172": [1, 2, 10, 56, 346, 2252, 15184],
    "A005260": [1, 2, 18, 164, 1810, 21252, 263844],
    "A002895": [1, 4, 28, 256, 2716, 31504, 387136],
    "A081085": [1, 4, 20, 112, 676, 4304, 28496],
    "A053175": [1, 8, 80, 896, 10816, 137728, 1823744],
    "A002893": [1, 3, 15, 93, 639, 4653, 35169],
    "A002426": [1, 1, 3, 7, 19, 51, 141],
    "A005725": [1, 1, 3, 10, 31, 101, 336],
    "A001006": [1, 1, 2, 4, 9, 21, 51],
    "A006318": [1, 2, 6, 22, 90, 394, 1806],
    "A001003": [1, 1, 3, 11, 45, 197, 903],
    "A000364": [1, 1, 5, 61, 1385, 50521],
    "A006953": [12, 120, 252, 240, 132, 32760, 12],
    "A001067": [1, -1, 1, -1, 1, -691, 1],
    "A226158": [0, 1, -1, 0, 1, 0, -3, 0, 17],
    "A062510": [0, 3, 3, 9, 15, 33, 63],
    "A054783": [0, 1, 3, 34, 987, 75025],
}

NAMES = {
    "A000225": "2^n - 1", "A062510": "2^n - (-1)^n", "A000032": "Lucas numbers",
    "A000045": "Fibonacci numbers", "A054783": "Fibonacci(n^2)", "A122045": "Euler numbers",
    "A000364": "Euler (secant) numbers", "A002445": "denominators of B_{2n}",
    "A001067": "numerators of B_{2n}/(2n)", "A006953": "denominators of B_{2n}/(2n)",
    "A226158": "Genocchi numbers", "A000110": "Bell numbers", "A000166": "derangements",
    "A000041": "partition numbers", "A000108": "Catalan numbers", "A000984": "central binomial",
    "A005259": "Apery numbers", "A005258": "Apery numbers, second kind",
    "A001850": "central Delannoy numbers", "A000172": "Franel numbers",
    "A005260": "sum C(n,k)^4", "A002895": "Domb numbers", "A053175": "Catalan-Larcombe-French",
    "A081085": "Zagier numbers", "A002893": "sum C(n,k)^2 C(2k,k)",
    "A002426": "central trinomial coefficients", "A005725": "quadrinomial coefficients",
    "A001006": "Motzkin numbers", "A006318": "large Schroeder numbers",
    "A001003": "little Schroeder numbers", "A001263": "Narayana triangle by rows",
}


def render(a_number, offset, values):
    head = f"# {a_number} {NAMES[a_number]}\n# offline fixture, see scripts/make_fixtures.py\n"
    return head + "".join(f"{offset + i} {v}\n" for i, v in enumerate(values))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true", help="compare with committed fixtures")
    args = ap.parse_args()
    data = build()
    for a, anchor in ANCHORS.items():
        got = data[a][1][: len(anchor)]
        if got != anchor:
            raise SystemExit(f"{a}: anchor mismatch {got} != {anchor}")
    stale = []
    for a, (offset, values) in sorted(data.items()):
        path = OUT / f"b{a[1:]}.txt"
        text = render(a, offset, values)
        if args.check:
            if not path.exists() or path.read_text() != text:
                stale.append(a)
        else:
            path.write_text(text)
    if stale:
        print("stale fixtures:", " ".join(stale))
        return 1
    print(f"{len(data)} fixtures {'verified' if args.check else 'written'} in {OUT}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
