import math
import random

import pytest
import sympy
from hypothesis import given, strategies as st

from seqlab.arith import (
    INDEX_LIMIT,
    ZERO,
    CongruenceWitness,
    FactoredInteger,
    PadicValuation,
    binomial_descent_check,
    carries,
    divisors,
    factorize,
    helou_terjanian_check,
    inverse_convolve_check,
    is_prime,
    kummer_valuation,
    legendre_binomial_valuation,
    mobius,
    mobius_convolve,
    padic_valuation,
    primes_upto,
    vp,
)
from seqlab.errors import DomainError
from seqlab.sequences import REGISTRY

SMALL_PRIMES = (2, 3, 5, 7, 11)


# factorization ---------------------------------------------------------------


def test_factorize_examples():
    assert factorize(1).factors == ()
    assert factorize(12).factors == ((2, 2), (3, 1))
    # trial-division oracle: 75024 = 2^4 * 3^2 * 521
    assert factorize(75024).factors == ((2, 4), (3, 2), (521, 1))


@given(st.integers(1, 10**9))
def test_factorize_matches_sympy(n):
    f = factorize(n)
    assert dict(f.factors) == sympy.factorint(n)
    assert math.prod(p**e for p, e in f.factors) == n
    assert [p for p, _ in f.factors] == sorted(p for p, _ in f.factors)


def test_factorize_large_semiprime():
    p, q = 1_000_003, 999_983
    assert factorize(p * q).factors == ((q, 1), (p, 1))


def test_factorize_domain():
    with pytest.raises(DomainError):
        factorize(0)
    with pytest.raises(DomainError):
        factorize(-5)
    with pytest.raises(DomainError):
        factorize(INDEX_LIMIT)


def test_factored_integer_invariants():
    assert ZERO.zero and ZERO.factors == ()
    with pytest.raises(ValueError):
        FactoredInteger(12, ((3, 1), (2, 2)))
    with pytest.raises(ValueError):
        FactoredInteger(13, ((2, 2), (3, 1)))


@given(st.integers(1, 5000))
def test_divisors_match_sympy(n):
    assert list(divisors(n)) == sympy.divisors(n)


# Mobius ----------------------------------------------------------------------


def test_mobius_examples():
    assert mobius(1) == 1
    assert mobius(12) == 0
    assert mobius(30) == -1


def test_mobius_sums_vanish():
    for n in range(1, 10**4 + 1):
        assert sum(mobius(d) for d in divisors(n)) == (1 if n == 1 else 0)


@given(st.integers(1, 10**6))
def test_mobius_matches_sympy(n):
    assert mobius(n) == int(sympy.mobius(n))


def test_mobius_convolve_examples():
    assert mobius_convolve(lambda n: n, 6) == 2
    assert mobius_convolve(REGISTRY["lucas"], 4) == 4
    for name in ("catalan", "apery1", "bell"):
        spec = REGISTRY[name]
        assert mobius_convolve(spec, 1) == spec(1)


@given(st.integers(1, 400))
def test_mobius_convolve_identity_is_totient(n):
    assert mobius_convolve(lambda k: k, n) == sympy.totient(n)


def test_inverse_convolve_examples():
    assert inverse_convolve_check(REGISTRY["mersenne"], 20)
    assert inverse_convolve_check(REGISTRY["const1"], 50)
    assert inverse_convolve_check(REGISTRY["apery1"], 16)


@pytest.mark.parametrize("name", sorted(REGISTRY))
def test_inversion_round_trip_registry(name):
    spec = REGISTRY[name]
    N = 256 if name not in ("franel4", "domb", "clf", "zagier", "a002893") else 128
    assert inverse_convolve_check(spec, N)


def test_primes():
    assert primes_upto(50) == list(sympy.primerange(2, 51))
    assert [n for n in range(200) if is_prime(n)] == list(sympy.primerange(2, 200))


# valuations ------------------------------------------------------------------


def test_vp_zero_is_infinite():
    v = padic_valuation(0, 5)
    assert v.infinite and v.value == math.inf
    assert vp(0, 3) == math.inf
    with pytest.raises(DomainError):
        padic_valuation(10, 4)


@given(st.integers(-10**12, 10**12).filter(bool), st.integers(-10**12, 10**12).filter(bool),
       st.sampled_from(SMALL_PRIMES))
def test_valuation_additive(a, b, p):
    va, vb = padic_valuation(a, p), padic_valuation(b, p)
    assert (va + vb).value == vp(a * b, p)
    assert isinstance(va + vb, PadicValuation)


def test_kummer_examples():
    assert kummer_valuation(9, 4, 3).value == 2
    assert carries(4, 5, 3) == 2
    assert kummer_valuation(10, 5, 2).value == vp(252, 2) == 2
    for n in range(20):
        assert kummer_valuation(n, 0, 7).value == 0
    with pytest.raises(DomainError):
        kummer_valuation(3, 5, 2)


def test_kummer_equals_legendre_random_triples():
    rng = random.Random(20240601)
    primes = primes_upto(50)
    for _ in range(1000):
        n = rng.randint(0, 2000)
        m = rng.randint(0, n)
        p = rng.choice(primes)
        k = kummer_valuation(n, m, p).value
        assert k == legendre_binomial_valuation(n, m, p) == vp(math.comb(n, m), p)


@given(st.integers(0, 3000), st.data(), st.sampled_from(primes_upto(60)))
def test_kummer_property(n, data, p):
    m = data.draw(st.integers(0, n))
    assert kummer_valuation(n, m, p).value == vp(math.comb(n, m), p)


# congruence witnesses --------------------------------------------------------


def test_congruence_witness_invariants():
    w = CongruenceWitness(73, 5, 2)
    assert w.holds and w.residue == 0
    w = CongruenceWitness(5, 1, 5)
    assert not w.holds and w.residue == 4
    exact = CongruenceWitness(6, 6, 0)
    assert exact.exact and exact.holds
    assert not CongruenceWitness(7, 6, 0).holds
    with pytest.raises(DomainError):
        CongruenceWitness(1, 2, -3)


def test_helou_terjanian_examples():
    w = helou_terjanian_check(2, 1, 5)
    assert (w.lhs - w.rhs, w.modulus, w.holds) == (250, 125, True)
    w = helou_terjanian_check(3, 1, 3)
    assert (w.lhs, w.rhs, w.modulus, w.holds) == (84, 3, 27, True)
    for n in range(10):
        w = helou_terjanian_check(n, 0, 7)
        assert w.holds and w.lhs - w.rhs == 0


def test_binomial_descent_examples():
    w = binomial_descent_check(9, 1, 3)
    assert (w.lhs - w.rhs, w.modulus, w.holds) == (81, 9, True)
    w = binomial_descent_check(8, 2, 2)
    assert (w.lhs, w.rhs, w.modulus, w.holds) == (70, 6, 8, True)
    w = binomial_descent_check(0, 3, 5)
    assert w.lhs == w.rhs == 0 and w.holds
    with pytest.raises(DomainError):
        binomial_descent_check(10, 1, 3)


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_binomial_congruences_exhaustive(p):
    for n in range(61):
        for m in range(n + 1):
            assert helou_terjanian_check(n, m, p).holds, (n, m, p)
    for n in range(0, 61, p):
        for lam in range(n // p + 2):
            assert binomial_descent_check(n, lam, p).holds, (n, lam, p)


def test_helou_terjanian_is_sharp_somewhere():
    # lowering the exponent by one must fail for some cell, else the check is vacuous
    from seqlab.arith import helou_terjanian_exponent

    tight = 0
    for n in range(1, 30):
        for m in range(1, n):
            e = helou_terjanian_exponent(n, m, 5)
            if (math.comb(5 * n, 5 * m) - math.comb(n, m)) % 5 ** (e + 1):
                tight += 1
    assert tight > 0
