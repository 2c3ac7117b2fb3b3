"""Exact integer arithmetic: factorization, Moebius function, Dirichlet
convolution, p-adic valuations and binomial-coefficient congruences.

Indices (the ``n`` in a convolution) are machine-sized; the values being
convolved are arbitrary-precision ints.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .errors import DomainError

INDEX_LIMIT = 2**64


@dataclass(frozen=True)
class FactoredInteger:
    value: int
    factors: tuple[tuple[int, int], ...] = ()
    zero: bool = False

    def __post_init__(self):
        if self.zero:
            if self.value != 0 or self.factors:
                raise DomainError("zero must carry value 0 and no factors")
            return
        prod = 1
        last = 1
        for p, e in self.factors:
            if e < 1 or p <= last:
                raise DomainError(f"malformed factor list {self.factors}")
            last = p
            prod *= p**e
        if prod != self.value:
            raise DomainError(f"factors {self.factors} do not multiply to {self.value}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)


ZERO = FactoredInteger(0, (), zero=True)


def _wheel():
    yield 2
    yield 3
    yield 5
    # 2*3*5 wheel: residues coprime to 30
    steps = (4, 2, 4, 2, 4, 6, 2, 6)
    d = 7
    i = 0
    while True:
        yield d
        d += steps[i]
        i = (i + 1) % 8


@lru_cache(maxsize=65536)
def _factor_tuple(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    for d in _wheel():
        if d * d > n:
            break
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def _check_index(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"expected an int index, got {n!r}")
    if n < 1:
        raise DomainError(f"index must be >= 1, got {n}")
    if n >= INDEX_LIMIT:
        raise DomainError(f"index {n} exceeds the 64-bit index bound")


def factorize(n: int) -> FactoredInteger:
    """Complete factorization of ``1 <= n < 2**64`` by trial division."""
    _check_index(n)
    return FactoredInteger(n, _factor_tuple(n))


@lru_cache(maxsize=65536)
def divisors(n: int) -> tuple[int, ...]:
    """Sorted positive divisors of n."""
    _check_index(n)
    divs = [1]
    for p, e in _factor_tuple(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


@lru_cache(maxsize=65536)
def mobius(n: int) -> int:
    _check_index(n)
    fac = _factor_tuple(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return _factor_tuple(n) == ((n, 1),)


def primes_upto(bound: int) -> list[int]:
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, flag in enumerate(sieve) if flag]


def mobius_convolve(a: Callable[[int], int], n: int) -> int:
    """(mu * a)(n) = sum over d | n of mu(n/d) a(d)."""
    return sum(mobius(n // d) * a(d) for d in divisors(n) if mobius(n // d))


def inverse_convolve_check(a: Callable[[int], int], N: int) -> bool:
    """True iff summing mu*a over the divisors of n recovers a(n) for every n <= N."""
    _check_index(N)
    g = {n: mobius_convolve(a, n) for n in range(1, N + 1)}
    return all(sum(g[d] for d in divisors(n)) == a(n) for n in range(1, N + 1))


# p-adic valuations -----------------------------------------------------------


@dataclass(frozen=True, order=False)
class PadicValuation:
    """nu_p of some rational; ``value`` is ``math.inf`` for the input 0."""

    prime: int
    value: int | float

    @property
    def infinite(self) -> bool:
        return self.value == math.inf

    def __add__(self, other: PadicValuation) -> PadicValuation:
        if other.prime != self.prime:
            raise DomainError("cannot combine valuations at different primes")
        return PadicValuation(self.prime, self.value + other.value)

    def __int__(self) -> int:
        if self.infinite:
            raise OverflowError("valuation of 0 is infinite")
        return int(self.value)

    def __eq__(self, other):
        if isinstance(other, PadicValuation):
            return self.prime == other.prime and self.value == other.value
        return self.value == other

    def __hash__(self):
        return hash((self.prime, self.value))

    def __lt__(self, other):
        return self.value < getattr(other, "value", other)

    def __le__(self, other):
        return self.value <= getattr(other, "value", other)

    def __gt__(self, other):
        return self.value > getattr(other, "value", other)

    def __ge__(self, other):
        return self.value >= getattr(other, "value", other)


def vp(x: int, p: int) -> int | float:
    """nu_p(x) for an integer x; ``math.inf`` when x == 0."""
    if x == 0:
        return math.inf
    x = abs(x)
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e


def padic_valuation(x: int, p: int) -> PadicValuation:
    _require_prime(p)
    return PadicValuation(p, vp(x, p))


def _require_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise DomainError(f"{p!r} is not a prime")


def legendre_factorial_valuation(n: int, p: int) -> int:
    """nu_p(n!) = sum_{i>=1} floor(n / p^i)."""
    total = 0
    q = p
    while q <= n:
        total += n // q
        q *= p
    return total


def legendre_binomial_valuation(n: int, m: int, p: int) -> int:
    return (
        legendre_factorial_valuation(n, p)
        - legendre_factorial_valuation(m, p)
        - legendre_factorial_valuation(n - m, p)
    )


def carries(a: int, b: int, p: int) -> int:
    """Number of carries when adding a and b in base p."""
    count = 0
    carry = 0
    while a or b or carry:
        digit_sum = a % p + b % p + carry
        carry = 1 if digit_sum >= p else 0
        count += carry
        a //= p
        b //= p
    return count


def kummer_valuation(n: int, m: int, p: int) -> PadicValuation:
    """nu_p(C(n, m)) as the carry count of m + (n - m) in base p."""
    _require_prime(p)
    if m < 0 or n < 0:
        raise DomainError("n and m must be non-negative")
    if m > n:
        raise DomainError(f"m={m} exceeds n={n}")
    return PadicValuation(p, carries(m, n - m, p))


# congruence evidence ---------------------------------------------------------


@dataclass(frozen=True)
class CongruenceWitness:
    """Evidence that lhs == rhs modulo ``modulus``.

    ``modulus == 0`` stands for p**inf: the claim is exact equality, and
    ``residue`` is the raw difference lhs - rhs.
    """

    lhs: int
    rhs: int
    modulus: int
    residue: int = field(init=False)
    holds: bool = field(init=False)

    def __post_init__(self):
        if self.modulus < 0:
            raise DomainError("modulus must be >= 0")
        diff = self.lhs - self.rhs
        residue = diff if self.modulus == 0 else diff % self.modulus
        object.__setattr__(self, "residue", residue)
        object.__setattr__(self, "holds", residue == 0)

    @property
    def exact(self) -> bool:
        return self.modulus == 0

    def as_dict(self) -> dict:
        return {
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "modulus": str(self.modulus),
            "residue": str(self.residue),
            "holds": self.holds,
        }


def _power_or_infinite(p: int, exponent: int | float) -> int:
    return 0 if exponent == math.inf else p**exponent


def helou_terjanian_exponent(n: int, m: int, p: int) -> int | float:
    base = 3 if p >= 5 else (2 if p == 3 else 1)
    return base + max(vp(m, p), vp(n - m, p)) + carries(m, n - m, p)


def helou_terjanian_check(n: int, m: int, p: int) -> CongruenceWitness:
    """C(np, mp) against C(n, m) at the Helou-Terjanian modulus.

    The exponent is base + max(nu_p(m), nu_p(n-m)) + nu_p(C(n, m)) with base
    3 for p >= 5, 2 for p = 3 and 1 for p = 2.
    """
    _require_prime(p)
    if not 0 <= m <= n:
        raise DomainError(f"need n >= m >= 0, got n={n}, m={m}")
    exponent = helou_terjanian_exponent(n, m, p)
    return CongruenceWitness(
        math.comb(n * p, m * p), math.comb(n, m), _power_or_infinite(p, exponent)
    )


def binomial_descent_exponent(n: int, lam: int, p: int) -> int | float:
    return max(vp(n, p), vp(n - lam * p, p))


def binomial_descent_check(n: int, lam: int, p: int) -> CongruenceWitness:
    """C(n, lam*p) against C(n/p, lam) modulo p**max(nu_p(n), nu_p(n - lam*p)).

    Requires p | n.
    """
    _require_prime(p)
    if n < 0 or lam < 0:
        raise DomainError("n and lambda must be non-negative")
    if n % p:
        raise DomainError(f"{p} does not divide {n}")
    exponent = binomial_descent_exponent(n, lam, p)
    return CongruenceWitness(
        math.comb(n, lam * p), math.comb(n // p, lam), _power_or_infinite(p, exponent)
    )


def lcm_all(values) -> int:
    out = 1
    for v in values:
        out = math.lcm(out, v)
    return out
