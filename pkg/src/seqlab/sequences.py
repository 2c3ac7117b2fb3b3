"""Exact generators for the binomial-sum families and the classical
combinatorial sequences, behind one memoized evaluation interface.

A :class:`SequenceSpec` names a family plus its integer parameters.  Specs are
hashable and callable: ``spec(n)`` returns the exact term.  Families defined
from ``n = 0`` keep that offset; realizability code only ever asks for
``n >= 1``.
"""
from __future__ import annotations

import math
import re
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .arith import divisors
from .errors import FamilyError, GeneratorError

# binomial caches -------------------------------------------------------------


@lru_cache(maxsize=4096)
def pascal_row(n: int) -> tuple[int, ...]:
    row = [1] * (n + 1)
    for k in range(n // 2):
        row[k + 1] = row[k] * (n - k) // (k + 1)
        row[n - k - 1] = row[k + 1]
    return tuple(row)


def binom(n: int, k: int) -> int:
    if k < 0 or k > n or n < 0:
        return 0
    if n > 4096:
        return math.comb(n, k)
    return pascal_row(n)[k]


def central(k: int) -> int:
    return binom(2 * k, k)


# binomial-sum families -------------------------------------------------------


def apery_sum(n, r, s):
    return sum(binom(n, k) ** r * binom(n + k, k) ** s for k in range(n + 1))


def delannoy_sum(n, r, s, t):
    return sum(
        binom(n, k) ** r * central(k) ** s * central(n - k) ** t for k in range(n + 1)
    )


def trinomial_sum(n, r, s, t, u):
    return sum(
        binom(n, 2 * k) ** r * binom(n + k, k) ** s * central(k) ** t * central(n - k) ** u
        for k in range(n // 2 + 1)
    )


def combined_sum(n, r, s, t, u):
    return sum(
        binom(n, k) ** r * binom(n + k, k) ** s * central(k) ** t * central(n - k) ** u
        for k in range(n + 1)
    )


def mixed_sum(n, r1, r2, s, t, u):
    # 0**0 == 1 in Python, which is the convention wanted for r1 or r2 == 0
    return sum(
        binom(n, k) ** r1
        * binom(n, 2 * k) ** r2
        * binom(n + k, k) ** s
        * central(k) ** t
        * central(n - k) ** u
        for k in range(n + 1)
    )


def clf(n):
    """Catalan-Larcombe-French numbers."""
    return 2**n * sum(
        binom(n, 2 * k) * central(k) ** 2 * 4 ** (n - 2 * k) for k in range(n // 2 + 1)
    )


def trinomial_by_expansion(n: int) -> int:
    """Coefficient of x^n in (x^2 + x + 1)^n, by repeated polynomial products."""
    if n < 0:
        raise FamilyError("n must be >= 0")
    poly = [1]
    for _ in range(n):
        nxt = [0] * (len(poly) + 2)
        for i, c in enumerate(poly):
            nxt[i] += c
            nxt[i + 1] += c
            nxt[i + 2] += c
        poly = nxt
    return poly[n]


# classical sequences ---------------------------------------------------------


def catalan(n):
    num = central(n)
    if num % (n + 1):
        raise GeneratorError(f"C({n}) not integral")
    return num // (n + 1)


def motzkin(n):
    return sum(binom(n, 2 * k) * catalan(k) for k in range(n // 2 + 1))


def large_schroder(n):
    return sum(binom(n + k, 2 * k) * catalan(k) for k in range(n + 1))


def narayana(n: int, k: int) -> int:
    if n < 1 or not 1 <= k <= n:
        return 0
    num = binom(n, k) * binom(n, k - 1)
    if num % n:
        raise GeneratorError(f"N({n},{k}) not integral")
    return num // n


def little_schroder(n):
    return sum(narayana(n, k) * 2 ** (k - 1) for k in range(1, n + 1))


@lru_cache(maxsize=None)
def fibonacci(n: int) -> int:
    """F_n by fast doubling; F_{-1} = 1 so U_n = a F_{n-2} + b F_{n-1} works at n = 1."""
    if n == -1:
        return 1
    if n < 0:
        raise FamilyError("fibonacci index must be >= -1")
    return _fib_pair(n)[0]


def _fib_pair(n):
    if n == 0:
        return 0, 1
    a, b = _fib_pair(n >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    return (d, c + d) if n & 1 else (c, d)


def lucas_like(n, a, b):
    return a * fibonacci(n - 2) + b * fibonacci(n - 1)


def sigma(n, k):
    return sum(d**k for d in divisors(n))


# prefix-recurrence families --------------------------------------------------


class _Prefix:
    """Dense per-key cache grown by a family-specific ``extend`` step."""

    def __init__(self, start, extend):
        self._start = start
        self._extend = extend
        self._values: dict[tuple, list] = {}
        self._lock = threading.Lock()

    def get(self, params: tuple, n: int):
        values = self._values.get(params)
        if values is not None and n < len(values):
            return values[n]
        with self._lock:
            values = self._values.setdefault(params, list(self._start(*params)))
            while len(values) <= n:
                values.append(self._extend(values, *params))
            return values[n]


def _partition_step(p):
    n = len(p)
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * p[n - g1]
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * p[n - g2]
        k += 1
    return total


def _bell_step(b):
    n = len(b) - 1
    return sum(binom(n, k) * b[k] for k in range(n + 1))


def _derangement_step(d):
    n = len(d)
    return (n - 1) * (d[-1] + d[-2])


class _Zigzag:
    """Euler up/down numbers via the Entringer triangle (Seidel boustrophedon)."""

    def __init__(self):
        self._row = [1]
        self._values = [1]
        self._lock = threading.Lock()

    def __call__(self, n: int) -> int:
        if n < len(self._values):
            return self._values[n]
        with self._lock:
            while len(self._values) <= n:
                m = len(self._row)
                prev = self._row
                row = [0] * (m + 1)
                for k in range(1, m + 1):
                    row[k] = row[k - 1] + prev[m - k]
                self._row = row
                self._values.append(row[m])
            return self._values[n]


zigzag = _Zigzag()


def secant_number(n):
    """(-1)^n E_{2n}."""
    return zigzag(2 * n)


@lru_cache(maxsize=None)
def bernoulli_even(n: int) -> Fraction:
    """B_{2n} from the tangent number t_{2n-1}: B_{2n} = (-1)^(n-1) 2n t / (4^n (4^n - 1))."""
    if n == 0:
        return Fraction(1)
    t = zigzag(2 * n - 1)
    return Fraction((-1) ** (n - 1) * 2 * n * t, 4**n * (4**n - 1))


def bernoulli_suite(n: int):
    """(B_{2n}, b_n, tau_n, eta_n, e_n) for n >= 1.

    b_n is the reduced denominator of B_{2n}; tau_n / eta_n = |B_{2n} / (2n)|
    in lowest terms; e_n = (-1)^n 2 (1 - 4^n) B_{2n}, a positive odd integer.
    """
    if n < 1:
        raise FamilyError("bernoulli_suite needs n >= 1")
    b2n = bernoulli_even(n)
    ratio = abs(b2n / (2 * n))
    e = (-1) ** n * 2 * (1 - 4**n) * b2n
    if e.denominator != 1 or e <= 0 or e.numerator % 2 == 0:
        raise GeneratorError(f"e_{n} = {e} is not a positive odd integer")
    return b2n, b2n.denominator, ratio.numerator, ratio.denominator, e.numerator


class _Stirling:
    def __init__(self, first_kind: bool):
        self._first = first_kind
        self._rows = [[1]]
        self._lock = threading.Lock()

    def __call__(self, n: int, k: int) -> int:
        if k < 0 or k > n:
            return 0
        if n >= len(self._rows):
            with self._lock:
                while len(self._rows) <= n:
                    prev = self._rows[-1]
                    m = len(prev)
                    row = [0] * (m + 1)
                    for j in range(1, m + 1):
                        mult = (m - 1) if self._first else j
                        row[j] = prev[j - 1] + (mult * prev[j] if j < m else 0)
                    self._rows.append(row)
        return self._rows[n][k]


stirling1 = _Stirling(first_kind=True)
stirling2 = _Stirling(first_kind=False)

_partitions = _Prefix(lambda: [1], _partition_step)
_bell = _Prefix(lambda: [1], _bell_step)
_derangements = _Prefix(lambda: [1, 0], _derangement_step)


def partition(n):
    return _partitions.get((), n)


def bell(n):
    return _bell.get((), n)


def derangements(n):
    return _derangements.get((), n)


# family registry -------------------------------------------------------------


def _positive_r(params):
    if params[0] < 1:
        return "r must be >= 1"
    if any(x < 0 for x in params):
        return "parameters must be non-negative"
    return None


def _nonneg(params):
    return "parameters must be non-negative" if any(x < 0 for x in params) else None


def _mixed_check(params):
    if any(x < 0 for x in params):
        return "parameters must be non-negative"
    if params[0] + params[1] < 1:
        return "need r1 + r2 >= 1"
    return None


def _positive(params):
    return "parameter must be >= 1" if params[0] < 1 else None


@dataclass(frozen=True)
class Family:
    tag: str
    params: tuple[str, ...]
    offset: int
    compute: Callable[..., int]
    check: Callable[[tuple], str | None] = _nonneg
    title: str = ""


FAMILIES: dict[str, Family] = {}


def _family(tag, params, offset, compute, check=_nonneg, title=""):
    FAMILIES[tag] = Family(tag, tuple(params), offset, compute, check, title)


_family("A", "rs", 0, apery_sum, _positive_r, "sum C(n,k)^r C(n+k,k)^s")
_family("D", "rst", 0, delannoy_sum, _positive_r, "sum C(n,k)^r C(2k,k)^s C(2n-2k,n-k)^t")
_family("T", "rstu", 0, trinomial_sum, _positive_r,
        "sum C(n,2k)^r C(n+k,k)^s C(2k,k)^t C(2n-2k,n-k)^u")
_family("C", "rstu", 0, combined_sum, _positive_r,
        "sum C(n,k)^r C(n+k,k)^s C(2k,k)^t C(2n-2k,n-k)^u")
_family("V", ("r1", "r2", "s", "t", "u"), 0, mixed_sum, _mixed_check,
        "sum C(n,k)^r1 C(n,2k)^r2 C(n+k,k)^s C(2k,k)^t C(2n-2k,n-k)^u")
_family("P", (), 0, clf, title="Catalan-Larcombe-French")
_family("catalan", (), 0, catalan, title="Catalan")
_family("motzkin", (), 0, motzkin, title="Motzkin")
_family("schroder", (), 0, large_schroder, title="large Schroeder")
_family("little-schroder", (), 1, little_schroder, title="little Schroeder")
_family("bell", (), 0, bell, title="Bell")
_family("derangements", (), 0, derangements, title="derangements")
_family("partition", (), 0, partition, title="partition numbers")
_family("lucas-like", "ab", 1, lucas_like, title="U_{n+2} = U_{n+1} + U_n, U_1 = a, U_2 = b")
_family("fib-squares", (), 1, lambda n: fibonacci(n * n), title="F_{n^2}")
_family("stirling1", "k", 1, lambda n, k: stirling1(n + k - 1, k), _positive,
        title="signless Stirling first kind column S1(n+k-1, k)")
_family("stirling2", "k", 1, lambda n, k: stirling2(n + k - 1, k), _positive,
        title="Stirling second kind column S2(n+k-1, k)")
_family("euler", (), 0, secant_number, title="(-1)^n E_{2n}")
_family("bernoulli-den", (), 1, lambda n: bernoulli_suite(n)[1], title="denominator of B_{2n}")
_family("tau", (), 1, lambda n: bernoulli_suite(n)[2], title="numerator of |B_{2n}/(2n)|")
_family("eta", (), 1, lambda n: bernoulli_suite(n)[3], title="denominator of |B_{2n}/(2n)|")
_family("genocchi", (), 1, lambda n: bernoulli_suite(n)[4], title="e_n = (-1)^n G_{2n}")
_family("sigma", "k", 1, sigma, title="divisor function sigma_k")
_family("mersenne", (), 0, lambda n: 2**n - 1, title="2^n - 1")
_family("neg2", (), 0, lambda n: abs((-2) ** n - 1), title="|(-2)^n - 1|")
_family("power", "d", 0, lambda n, d: d**n, title="d^n")
_family("const", "c", 0, lambda n, c: c, title="constant")
_family("identity", (), 1, lambda n: n, title="n")


@lru_cache(maxsize=None)
def _evaluate(tag: str, params: tuple, n: int) -> int:
    value = FAMILIES[tag].compute(n, *params)
    if value < 0:
        raise GeneratorError(f"{tag}{params} produced a negative term at n={n}")
    return value


@dataclass(frozen=True)
class OeisLink:
    """How spec index n maps onto an OEIS entry.

    The OEIS index is ``scale * n + shift``; ``transform`` is applied to the
    OEIS value before comparing (``abs`` or ``alt`` for (-1)^n * value).
    """

    a_number: str
    shift: int = 0
    scale: int = 1
    transform: str = "identity"

    def index(self, n: int) -> int:
        return self.scale * n + self.shift

    def value(self, n: int, v: int) -> int:
        if self.transform == "abs":
            return abs(v)
        if self.transform == "alt":
            return (-1) ** n * v
        return v


@dataclass(frozen=True)
class SequenceSpec:
    family: str
    params: tuple[int, ...] = ()
    name: str = field(default="", compare=False)
    oeis: OeisLink | None = field(default=None, compare=False)

    def __post_init__(self):
        fam = FAMILIES.get(self.family)
        if fam is None:
            raise FamilyError(f"unknown family {self.family!r}")
        params = tuple(int(x) for x in self.params)
        object.__setattr__(self, "params", params)
        if len(params) != len(fam.params):
            raise FamilyError(
                f"family {self.family} takes parameters {fam.params}, got {params}"
            )
        problem = fam.check(params) if params else None
        if problem:
            raise FamilyError(f"{self.descriptor()}: {problem}")

    @property
    def offset(self) -> int:
        return FAMILIES[self.family].offset

    def __call__(self, n: int) -> int:
        if n < self.offset:
            raise FamilyError(f"{self.label}: index {n} below offset {self.offset}")
        return _evaluate(self.family, self.params, n)

    def terms(self, start: int, stop: int) -> list[int]:
        """Terms for start <= n <= stop (inclusive)."""
        return [self(n) for n in range(start, stop + 1)]

    def descriptor(self) -> str:
        fam = FAMILIES[self.family]
        if not fam.params:
            return self.family
        args = ",".join(f"{k}={v}" for k, v in zip(fam.params, self.params))
        return f"{self.family}:{args}"

    @property
    def label(self) -> str:
        return self.name or self.descriptor()


def _spec(family, params=(), name="", a_number=None, **link):
    oeis = OeisLink(a_number, **link) if a_number else None
    return SequenceSpec(family, tuple(params), name=name, oeis=oeis)


REGISTRY: dict[str, SequenceSpec] = {
    s.name: s
    for s in [
        _spec("A", (2, 2), "apery1", "A005259"),
        _spec("A", (2, 1), "apery2", "A005258"),
        _spec("A", (1, 1), "delannoy", "A001850"),
        _spec("A", (2, 0), "central-binomial", "A000984"),
        _spec("A", (3, 0), "franel", "A000172"),
        _spec("A", (4, 0), "franel4", "A005260"),
        _spec("D", (2, 1, 1), "domb", "A002895"),
        _spec("D", (1, 1, 1), "zagier", "A081085"),
        _spec("D", (2, 1, 0), "a002893", "A002893"),
        _spec("P", (), "clf", "A053175"),
        _spec("T", (1, 0, 1, 0), "trinomial", "A002426"),
        _spec("V", (1, 1, 0, 0, 0), "quadrinomial", "A005725"),
        _spec("catalan", (), "catalan", "A000108"),
        _spec("motzkin", (), "motzkin", "A001006"),
        _spec("schroder", (), "schroder", "A006318"),
        _spec("little-schroder", (), "little-schroder", "A001003"),
        _spec("bell", (), "bell", "A000110"),
        _spec("derangements", (), "derangements", "A000166"),
        _spec("partition", (), "partitions", "A000041"),
        _spec("lucas-like", (1, 1), "fibonacci", "A000045"),
        _spec("lucas-like", (1, 3), "lucas", "A000032"),
        _spec("fib-squares", (), "fib-squares", "A054783"),
        _spec("euler", (), "euler", "A000364"),
        _spec("euler", (), "euler-signed", "A122045", scale=2, transform="alt"),
        _spec("bernoulli-den", (), "bernoulli-den", "A002445"),
        _spec("tau", (), "tau", "A001067", transform="abs"),
        _spec("eta", (), "eta", "A006953"),
        _spec("genocchi", (), "genocchi", "A226158", scale=2, transform="alt"),
        _spec("mersenne", (), "mersenne", "A000225"),
        _spec("neg2", (), "neg2", "A062510"),
        _spec("sigma", (1,), "sigma1"),
        _spec("sigma", (2,), "sigma2"),
        _spec("sigma", (3,), "sigma3"),
        _spec("power", (2,), "powers2"),
        _spec("power", (3,), "powers3"),
        _spec("const", (1,), "const1"),
        _spec("identity", (), "identity"),
    ]
}

#: The seven sporadic Apery-like sequences registered for the p^{2m} sweep.
SPORADIC = ("franel", "franel4", "apery1", "apery2", "zagier", "domb", "a002893")


_CALL = re.compile(r"^([A-Za-z0-9\-]+)\(([-\d,\s]*)\)$")


def parse_spec(text: str) -> SequenceSpec:
    """Resolve a registry name or a family descriptor.

    Accepted forms: ``apery1``, ``A:r=2,s=2``, ``A-family:r=2,s=2``,
    ``A(2,2)``, ``sigma:k=2``, ``lucas-like:a=1,b=3``.
    """
    text = text.strip()
    if text in REGISTRY:
        return REGISTRY[text]
    m = _CALL.match(text)
    if m:
        tag = m.group(1)
        params = tuple(int(x) for x in m.group(2).split(",") if x.strip())
        return SequenceSpec(_resolve_tag(tag), params)
    tag, _, rest = text.partition(":")
    tag = _resolve_tag(tag)
    fam = FAMILIES[tag]
    values = {}
    for item in filter(None, (x.strip() for x in rest.split(","))):
        key, eq, val = item.partition("=")
        if not eq:
            raise FamilyError(f"malformed parameter {item!r} in {text!r}")
        try:
            values[key.strip()] = int(val)
        except ValueError:
            raise FamilyError(f"non-integer parameter {item!r} in {text!r}") from None
    unknown = set(values) - set(fam.params)
    missing = [p for p in fam.params if p not in values]
    if unknown or missing:
        raise FamilyError(
            f"{text!r}: family {tag} takes {fam.params}"
            + (f", unknown {sorted(unknown)}" if unknown else "")
            + (f", missing {missing}" if missing else "")
        )
    return SequenceSpec(tag, tuple(values[p] for p in fam.params))


def _resolve_tag(tag: str) -> str:
    tag = tag.strip()
    if tag.endswith("-family"):
        tag = tag[: -len("-family")]
    if tag not in FAMILIES:
        raise FamilyError(f"unknown family {tag!r}")
    return tag
