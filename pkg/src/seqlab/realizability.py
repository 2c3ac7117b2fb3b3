"""Sign and Dold conditions on finite prefixes, Fail(a) lower bounds and
growth-based sign certificates."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import CongruenceWitness, divisors, is_prime, lcm_all, mobius, primes_upto
from .errors import DomainError, IndexRangeError
from .sequences import SequenceSpec

REALIZABLE = "realizable-on-prefix"
SIGN_VIOLATED = "sign-violated"
DOLD_VIOLATED = "dold-violated-only"

#: Largest index the prime-power Dold form will evaluate.
MAX_INDEX = 4096

#: Growth constants below this are rejected by :func:`growth_certificate`.
MIN_GROWTH = Fraction(1221, 1000)

#: Exact Fail values established by published theorems, keyed by registry name.
KNOWN_FAIL = {
    "fib-squares": 5,
    "lucas": 1,
    "mersenne": 1,
    "neg2": 1,
    "powers2": 1,
    "powers3": 1,
    "const1": 1,
    "sigma1": 1,
    "sigma2": 1,
    "sigma3": 1,
    "euler": 1,
    "bernoulli-den": 1,
    "tau": 1,
    "eta": 1,
}

#: Binomial-sum families that are realizable for every admissible parameter
#: tuple, apart from the exceptions in :func:`even_index_exception`.
REALIZABLE_FAMILIES = frozenset({"A", "D", "T", "C", "V", "P"})


def even_index_exception(spec: SequenceSpec) -> bool:
    """True for T(n, r, s, 0, 0) and V(n, 0, r2, s, 0, 0).

    With no central-binomial factor, X(2) - X(1) = 3^s is odd, so 2 does not
    divide g(2) and the sequence is not realizable.
    """
    if spec.family == "T":
        return spec.params[2] == spec.params[3] == 0
    if spec.family == "V":
        r1, _, _, t, u = spec.params
        return r1 == 0 and t == u == 0
    return False


def known_fail(spec: SequenceSpec) -> int | None:
    if spec.family in REALIZABLE_FAMILIES:
        return None if even_index_exception(spec) else 1
    if spec.family == "stirling2" and spec.params[0] in (1, 2):
        return 1
    return KNOWN_FAIL.get(spec.name)


@dataclass(frozen=True)
class MobiusProfile:
    """g(n) = (mu * a)(n) for 1 <= n <= N.  ``profile[n]`` is 1-based."""

    spec: SequenceSpec
    N: int
    terms: tuple[int, ...]
    g: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.N:
            raise IndexError(n)
        return self.g[n - 1]

    def a(self, n: int) -> int:
        return self.terms[n - 1]

    def round_trip(self) -> bool:
        return all(
            sum(self[d] for d in divisors(n)) == self.a(n) for n in range(1, self.N + 1)
        )


def profile(spec: SequenceSpec, N: int) -> MobiusProfile:
    if N < 1:
        raise DomainError("N must be >= 1")
    terms = tuple(spec(n) for n in range(1, N + 1))
    g = tuple(
        sum(mobius(n // d) * terms[d - 1] for d in divisors(n)) for n in range(1, N + 1)
    )
    return MobiusProfile(spec, N, terms, g)


@dataclass(frozen=True)
class RealizabilityReport:
    spec: SequenceSpec
    N: int
    sign_failures: tuple[int, ...]
    dold_failures: tuple[tuple[int, int], ...]
    verdict: str
    fail_lower_bound: int | str
    lcm_growth: tuple[int, ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def realizable(self) -> bool:
        return self.verdict == REALIZABLE

    @property
    def diverging(self) -> bool:
        """The running lcm grew at three or more distinct indices."""
        return len(self.lcm_growth) >= 3

    def as_dict(self) -> dict:
        return {
            "spec": self.spec.descriptor(),
            "name": self.spec.label,
            "N": self.N,
            "verdict": self.verdict,
            "sign_failures": list(self.sign_failures),
            "dold_failures": [[n, q] for n, q in self.dold_failures],
            "fail_lower_bound": str(self.fail_lower_bound),
            "lcm_growth": list(self.lcm_growth),
            "diverging": self.diverging,
            "notes": list(self.notes),
        }


def _dold_quotient(n: int, gn: int) -> int:
    return n // math.gcd(n, gn)


def report_from_profile(prof: MobiusProfile) -> RealizabilityReport:
    sign = tuple(n for n in range(1, prof.N + 1) if prof[n] < 0)
    dold = tuple(
        (n, _dold_quotient(n, prof[n])) for n in range(1, prof.N + 1) if prof[n] % n
    )
    growth = []
    running = 1
    for n, q in dold:
        new = math.lcm(running, q)
        if new != running:
            growth.append(n)
            running = new
    if sign:
        verdict, bound = SIGN_VIOLATED, SIGN_VIOLATED
    else:
        verdict = DOLD_VIOLATED if dold else REALIZABLE
        bound = lcm_all(q for _, q in dold)
    notes = ()
    if prof.spec.offset == 0:
        notes = (f"a(0) = {prof.spec(0)} is defined but not consumed (n >= 1 only)",)
    return RealizabilityReport(
        prof.spec, prof.N, sign, dold, verdict, bound, tuple(growth), notes
    )


def check_realizable(spec: SequenceSpec, N: int) -> RealizabilityReport:
    return report_from_profile(profile(spec, N))


def dold_prime_power_form(
    spec: SequenceSpec, n: int, p: int, m: int, max_index: int = MAX_INDEX
) -> CongruenceWitness:
    """Witness for a(n p^m) == a(n p^(m-1)) mod p^m."""
    if n < 1 or m < 1:
        raise DomainError("need n >= 1 and m >= 1")
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    top = n * p**m
    if top > max_index:
        raise IndexRangeError(f"index {top} = {n}*{p}^{m} beyond range {max_index}")
    return CongruenceWitness(spec(top), spec(n * p ** (m - 1)), p**m)


def prime_power_cells(N: int):
    """(n, p, m) with gcd(n, p) = 1 and n p^m <= N."""
    for p in primes_upto(N):
        pm = p
        m = 1
        while pm <= N:
            for n in range(1, N // pm + 1):
                if n % p:
                    yield n, p, m
            m += 1
            pm *= p


def dold_audit(spec: SequenceSpec, N: int) -> tuple[bool, bool]:
    """(divisor-sum verdict, prime-power verdict) for the Dold condition on 1..N."""
    prof = profile(spec, N)
    divisor_ok = all(prof[n] % n == 0 for n in range(1, N + 1))
    power_ok = all(
        (prof.a(n * p**m) - prof.a(n * p ** (m - 1))) % p**m == 0
        for n, p, m in prime_power_cells(N)
    )
    return divisor_ok, power_ok


def dold_forms_agree(spec: SequenceSpec, N: int) -> bool:
    """True iff the divisor-sum and prime-power Dold checks give the same verdict."""
    divisor_ok, power_ok = dold_audit(spec, N)
    return divisor_ok == power_ok


@dataclass(frozen=True)
class FailEstimate:
    lower_bound: int | str
    certified_exact: bool
    diverging: bool = False

    @property
    def sign_violated(self) -> bool:
        return self.lower_bound == SIGN_VIOLATED


def fail_estimate(spec: SequenceSpec, N: int) -> FailEstimate:
    """lcm over n <= N of n / gcd(n, g(n)).  Never claims Fail = infinity."""
    report = check_realizable(spec, N)
    if report.sign_failures:
        return FailEstimate(SIGN_VIOLATED, False)
    known = known_fail(spec)
    bound = report.fail_lower_bound
    if known is not None and known % bound:
        raise AssertionError(
            f"{spec.label}: lower bound {bound} does not divide the known Fail {known}"
        )
    return FailEstimate(bound, known == bound, report.diverging)


@dataclass(frozen=True)
class Certificate:
    kind: str
    N: int
    granted: bool
    violation: int | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.granted


def growth_certificate(spec: SequenceSpec, N: int, C) -> Certificate:
    """Grant when a(n+1) >= C a(n) for 1 <= n < N with C >= 1.221 (exact rationals).

    A granted certificate guarantees the sign condition on the prefix.
    """
    C = Fraction(C)
    if C < MIN_GROWTH:
        raise DomainError(f"growth constant {C} below 1.221")
    if N < 1:
        raise DomainError("N must be >= 1")
    prev = spec(1)
    for n in range(1, N):
        cur = spec(n + 1)
        if cur * C.denominator < C.numerator * prev:
            return Certificate("growth", N, False, n, f"a({n + 1}) < {C} a({n})")
        prev = cur
    return Certificate("growth", N, True, detail=f"ratio >= {C}")


def puri_certificate(spec: SequenceSpec, N: int) -> Certificate:
    """Grant when a is non-decreasing on 1..N and a(2n) >= n a(n) for 2n <= N."""
    if N < 2:
        raise DomainError("N must be >= 2")
    terms = [None] + spec.terms(1, N)
    for n in range(1, N):
        if terms[n + 1] < terms[n]:
            return Certificate("puri", N, False, n, f"a({n + 1}) < a({n})")
    for n in range(1, N // 2 + 1):
        if terms[2 * n] < n * terms[n]:
            return Certificate("puri", N, False, n, f"a({2 * n}) < {n} a({n})")
    return Certificate("puri", N, True)


def quartic_root_bracket(digits: int = 15) -> tuple[Fraction, Fraction]:
    """Rational bracket [lo, hi] around the positive root of x^4 = x + 1,
    of width below 10^-digits, by bisection."""
    lo, hi = Fraction(1), Fraction(2)
    width = Fraction(1, 10**digits)

    def f(x):
        return x**4 - x - 1

    while hi - lo >= width:
        mid = (lo + hi) / 2
        if f(mid) <= 0:
            lo = mid
        else:
            hi = mid
    return lo, hi


def quartic_root(digits: int = 15) -> Fraction:
    lo, hi = quartic_root_bracket(digits)
    return (lo + hi) / 2


def first_dold_failure(spec: SequenceSpec, N: int) -> int | None:
    prof = profile(spec, N)
    for n in range(1, N + 1):
        if prof[n] % n:
            return n
    return None
