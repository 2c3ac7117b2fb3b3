"""Prime witnesses against almost-realizability.

For a sequence a and a prime p, if (mu * a)(k p) is not divisible by p at some
index k p, then p divides every m for which m * a could satisfy the Dold
condition.  Witnesses at unboundedly many primes rule out almost-realizability;
here we only report the witnesses found below a bound.

Each residue is computed twice: by exact big-integer convolution reduced mod p,
and by an independent mod-p computation of the terms.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .arith import is_prime, mobius, divisors, primes_upto
from .errors import WitnessContractError
from .sequences import REGISTRY, SequenceSpec, bernoulli_suite

# modular reference paths -----------------------------------------------------


def binom_mod_p(n: int, k: int, p: int) -> int:
    """C(n, k) mod p by Lucas' theorem."""
    if k < 0 or k > n:
        return 0
    out = 1
    while n or k:
        ni, ki = n % p, k % p
        if ki > ni:
            return 0
        out = out * math.comb(ni, ki) % p
        n //= p
        k //= p
    return out


def catalan_mod_p(k: int, p: int) -> int:
    return (binom_mod_p(2 * k, k, p) - binom_mod_p(2 * k, k + 1, p)) % p


def motzkin_mod_p(n: int, p: int) -> int:
    return sum(binom_mod_p(n, 2 * k, p) * catalan_mod_p(k, p) for k in range(n // 2 + 1)) % p


def schroder_mod_p(n: int, p: int) -> int:
    return sum(binom_mod_p(n + k, 2 * k, p) * catalan_mod_p(k, p) for k in range(n + 1)) % p


def little_schroder_mod_p(n: int, p: int) -> int:
    # s(n) = S(n)/2 for n >= 1; p is odd
    return schroder_mod_p(n, p) * pow(2, -1, p) % p


def bell_mod_p(n: int, p: int) -> int:
    """Bell(n) mod p from the Bell triangle."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append((nxt[-1] + x) % p)
        row = nxt
    return row[0] % p


def derangement_mod_p(n: int, p: int) -> int:
    d = 1
    for k in range(1, n + 1):
        d = (k * d + (-1) ** k) % p
    return d


def genocchi_mod_p(n: int, p: int) -> int:
    """e_n mod p from the integer Genocchi recurrence 2 G_j = -sum_{i<j} C(j,i) G_i (p odd)."""
    half = pow(2, -1, p)
    G = [0, 1]
    for j in range(2, 2 * n + 1):
        G.append(-half * sum(binom_mod_p(j, i, p) * G[i] for i in range(j)) % p)
    return (-1) ** n * G[2 * n] % p


def fibonacci_mod_p(n: int, p: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, (a + b) % p
    return a


# witness records -------------------------------------------------------------


@dataclass(frozen=True)
class PrimeWitness:
    spec: SequenceSpec
    prime: int
    index: int
    residue: int
    expected: int | None
    modular_residue: int

    @property
    def valid(self) -> bool:
        return self.residue != 0

    @property
    def paths_agree(self) -> bool:
        return self.residue == self.modular_residue

    @property
    def matches_claim(self) -> bool:
        return self.expected is None or self.residue == self.expected

    def fail_contribution(self) -> int:
        """index / gcd(index, g(index)): the factor the Dold repair must absorb."""
        g = convolve_exact(self.spec, self.index)
        return self.index // math.gcd(self.index, g)

    def as_dict(self) -> dict:
        return {
            "spec": self.spec.label,
            "prime": self.prime,
            "index": self.index,
            "residue": self.residue,
            "expected": self.expected,
            "modular_residue": self.modular_residue,
            "valid": self.valid,
        }


def convolve_exact(spec: SequenceSpec, n: int) -> int:
    return sum(mobius(n // d) * spec(d) for d in divisors(n))


def _convolve_mod(term_mod: Callable[[int, int], int], n: int, p: int) -> int:
    return sum(mobius(n // d) * term_mod(d, p) for d in divisors(n)) % p


@dataclass(frozen=True)
class Claim:
    spec_name: str
    index: Callable[[int], int]
    expected: Callable[[int], int]
    term_mod: Callable[[int, int], int]
    min_prime: int = 2
    description: str = ""


CLAIMS: dict[str, Claim] = {
    "catalan": Claim("catalan", lambda p: p, lambda p: 1 % p, catalan_mod_p, 2,
                     "(mu*C)(p) = C(p) - 1 == 1 mod p"),
    "motzkin": Claim("motzkin", lambda p: 2 * p, lambda p: 1, motzkin_mod_p, 3,
                     "(mu*M)(2p) = M(2p) - M(p) - M(2) + M(1) == 1 mod p"),
    "schroder": Claim("schroder", lambda p: p, lambda p: 2, schroder_mod_p, 3,
                      "(mu*S)(p) = S(p) - S(1) == 2 mod p"),
    "little-schroder": Claim("little-schroder", lambda p: p, lambda p: 1,
                             little_schroder_mod_p, 3, "(mu*s)(p) == 1 mod p"),
    "bell": Claim("bell", lambda p: p, lambda p: 1 % p, bell_mod_p, 2,
                  "Bell(p) - Bell(1) == 1 mod p (Touchard)"),
    "derangements": Claim("derangements", lambda p: p, lambda p: (-1) ** p % p,
                          derangement_mod_p, 2, "d_p - d_1 == (-1)^p mod p"),
    "genocchi": Claim("genocchi", lambda p: p, lambda p: p - 1, genocchi_mod_p, 5,
                      "e_p - e_1 == -1 mod p"),
    "fibonacci": Claim("fibonacci", lambda p: p, lambda p: None, fibonacci_mod_p, 2,
                       "F_p - F_1 mod p, nonzero when p is not +-1 mod 5"),
}


def claim_witness(claim: str, p: int) -> PrimeWitness:
    c = CLAIMS[claim]
    if not is_prime(p):
        raise WitnessContractError(f"{p} is not prime")
    if p < c.min_prime:
        raise WitnessContractError(f"{claim} witness needs p >= {c.min_prime}, got {p}")
    spec = REGISTRY[c.spec_name]
    n = c.index(p)
    residue = convolve_exact(spec, n) % p
    modular = _convolve_mod(c.term_mod, n, p)
    return PrimeWitness(spec, p, n, residue, c.expected(p), modular)


def catalan_witness(p):
    return claim_witness("catalan", p)


def motzkin_witness(p):
    return claim_witness("motzkin", p)


def schroder_witness(p):
    return claim_witness("schroder", p)


def little_schroder_witness(p):
    return claim_witness("little-schroder", p)


def little_schroder_doubling(p: int) -> bool:
    """2 (mu*s)(p) == (mu*S)(p) mod p, from S(n) = 2 s(n) for n >= 1."""
    small = little_schroder_witness(p)
    large = schroder_witness(p)
    return 2 * small.residue % p == large.residue


def bell_witness(p):
    return claim_witness("bell", p)


def derangement_witness(p):
    return claim_witness("derangements", p)


def genocchi_witness(p):
    return claim_witness("genocchi", p)


def fibonacci_witness(p):
    return claim_witness("fibonacci", p)


def genocchi_rational_residue(p: int) -> int:
    """e_p - e_1 mod p computed straight from the exact Bernoulli rational B_{2p}."""
    if p < 5 or not is_prime(p):
        raise WitnessContractError("need a prime p >= 5")
    b2p, *_ = bernoulli_suite(p)
    if b2p.denominator % p == 0:
        raise WitnessContractError(f"B_{2 * p} is not p-integral")
    e_p = (-1) ** p * 2 * (1 - 4**p) * b2p
    return (e_p.numerator * pow(e_p.denominator, -1, p) - 1) % p


def witness_scan(spec, bound: int, expected=None, index=None, min_prime=2) -> list[PrimeWitness]:
    """Primes p <= bound where (mu * a)(index(p)) is nonzero mod p.

    ``spec`` is a :class:`SequenceSpec` or a registered claim name; for a
    claim name, its index map, expected residue and modular path are used.
    ``expected`` (a callable of p, or an int) further restricts to witnesses
    with that residue.
    """
    if isinstance(spec, str) and spec in CLAIMS:
        c = CLAIMS[spec]
        out = []
        for p in primes_upto(bound):
            if p < max(c.min_prime, min_prime):
                continue
            w = claim_witness(spec, p)
            if w.valid and _wanted(w, expected):
                out.append(w)
        return out
    if isinstance(spec, str):
        spec = REGISTRY[spec]
    index = index or (lambda p: p)
    out = []
    for p in primes_upto(bound):
        if p < min_prime:
            continue
        n = index(p)
        residue = convolve_exact(spec, n) % p
        if residue:
            w = PrimeWitness(spec, p, n, residue, None, residue)
            if _wanted(w, expected):
                out.append(w)
    return out


def _wanted(w: PrimeWitness, expected) -> bool:
    if expected is None:
        return True
    target = expected(w.prime) if callable(expected) else expected
    return w.residue == target % w.prime


def fibonacci_first_failure(N: int) -> int | None:
    """Smallest n <= N with n not dividing (mu * F)(n)."""
    fib = REGISTRY["fibonacci"]
    for n in range(1, N + 1):
        if convolve_exact(fib, n) % n:
            return n
    return None
