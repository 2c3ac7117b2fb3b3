"""Explicit finite self-maps realizing a realizable prefix.

A prefix a(1..N) with g = mu * a satisfying the sign and Dold conditions is
realized by a disjoint union of c[n] = g(n)/n cycles of length n.  Maps keep
their cycle type; the function table ``next`` is materialized only when the
point count stays under :data:`SIZE_LIMIT`.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .arith import divisors
from .errors import NotRealizableError, SizeGuardError
from .realizability import profile
from .sequences import SequenceSpec

SIZE_LIMIT = 10**7


@dataclass(frozen=True)
class OrbitProfile:
    N: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.N:
            raise ValueError("need one count per period 1..N")
        if any(c < 0 for c in self.counts):
            raise ValueError("orbit counts must be non-negative")

    def __getitem__(self, n: int) -> int:
        return self.counts[n - 1]

    @property
    def size(self) -> int:
        return sum(n * c for n, c in enumerate(self.counts, 1))

    def periodic_count(self, n: int) -> int:
        return sum(d * self[d] for d in divisors(n) if d <= self.N)


def orbit_profile(spec: SequenceSpec, N: int) -> OrbitProfile:
    prof = profile(spec, N)
    counts = []
    for n in range(1, N + 1):
        g = prof[n]
        if g < 0:
            raise NotRealizableError(n, f"(mu*a)({n}) = {g} < 0")
        if g % n:
            raise NotRealizableError(n, f"{n} does not divide (mu*a)({n}) = {g}")
        counts.append(g // n)
    return OrbitProfile(N, tuple(counts))


@dataclass(frozen=True, eq=False)
class FiniteMap:
    """A permutation given by its cycle type ``{length: count}``.

    ``next`` (numpy int64 array) and ``labels`` (period, orbit id, position
    per point) are present when the map was materialized.
    """

    cycles: dict
    next: np.ndarray | None = None
    labels: tuple | None = None

    @property
    def size(self) -> int:
        return sum(length * count for length, count in self.cycles.items())

    @property
    def materialized(self) -> bool:
        return self.next is not None

    def cycle_count(self, length: int) -> int:
        return self.cycles.get(length, 0)


def _materialize(cycles: dict, limit: int):
    size = sum(length * count for length, count in cycles.items())
    if size > limit:
        raise SizeGuardError(f"map would have {size} points, limit is {limit}")
    nxt = np.empty(size, dtype=np.int64)
    labels = []
    base = 0
    for length in sorted(cycles):
        for orbit in range(cycles[length]):
            idx = np.arange(base, base + length, dtype=np.int64)
            nxt[base : base + length] = np.roll(idx, -1)
            labels.extend((length, orbit, pos) for pos in range(length))
            base += length
    return nxt, tuple(labels)


def build_map(prof: OrbitProfile, materialize: bool = True, limit: int = SIZE_LIMIT) -> FiniteMap:
    """Disjoint union of c[n] cycles of length n for each n <= N."""
    cycles = {n: c for n, c in enumerate(prof.counts, 1) if c}
    if not materialize:
        return FiniteMap(cycles)
    nxt, labels = _materialize(cycles, limit)
    return FiniteMap(cycles, nxt, labels)


def iterate_count(fmap: FiniteMap, n: int) -> int:
    """#{x : T^n(x) = x} by applying the function table n times to every point."""
    if not fmap.materialized:
        raise SizeGuardError("map has no function table; build it with materialize=True")
    start = np.arange(fmap.size, dtype=np.int64)
    cur = start
    for _ in range(n):
        cur = fmap.next[cur]
    return int(np.count_nonzero(cur == start))


def divisor_count(fmap: FiniteMap, n: int) -> int:
    """#{x : T^n(x) = x} from the cycle type: sum of d * c[d] over d | n."""
    return sum(length * count for length, count in fmap.cycles.items() if n % length == 0)


def periodic_points(fmap: FiniteMap, n: int, method: str = "auto") -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    if method == "iterate" or (method == "auto" and fmap.materialized):
        return iterate_count(fmap, n)
    if method in ("divisor", "auto"):
        return divisor_count(fmap, n)
    raise ValueError(f"unknown method {method!r}")


def product_map(m1: FiniteMap, m2: FiniteMap, materialize: bool | None = None,
                limit: int = SIZE_LIMIT) -> FiniteMap:
    """T x F on the Cartesian product.

    An a-cycle times a b-cycle splits into gcd(a, b) cycles of length
    lcm(a, b).  The table is built point-wise (x, y) -> x * |Y| + y when both
    factors are materialized and the product fits under ``limit``.
    """
    cycles = Counter()
    for a, ca in m1.cycles.items():
        for b, cb in m2.cycles.items():
            cycles[math.lcm(a, b)] += ca * cb * math.gcd(a, b)
    cycles = dict(sorted(cycles.items()))
    size = m1.size * m2.size
    if materialize is None:
        materialize = m1.materialized and m2.materialized and size <= limit
    if not materialize:
        return FiniteMap(cycles)
    if not (m1.materialized and m2.materialized):
        raise SizeGuardError("both factors need function tables to build the product table")
    if size > limit:
        raise SizeGuardError(f"product would have {size} points, limit is {limit}")
    n2 = m2.size
    nxt = (m1.next[:, None] * n2 + m2.next[None, :]).reshape(-1)
    return FiniteMap(cycles, nxt, None)


def realize(spec: SequenceSpec, N: int, materialize: bool = True) -> FiniteMap:
    return build_map(orbit_profile(spec, N), materialize=materialize)


def verify_map(fmap: FiniteMap, spec: SequenceSpec, N: int) -> list[int]:
    """Indices n <= N where the map's periodic-point count differs from a(n)."""
    return [n for n in range(1, N + 1) if periodic_points(fmap, n) != spec(n)]


def export_table(fmap: FiniteMap, N: int) -> str:
    """Plain-text function table: header ``<size> <N>``, then next(i) on line i."""
    if not fmap.materialized:
        raise SizeGuardError("map has no function table to export")
    lines = [f"{fmap.size} {N}"]
    lines.extend(str(int(x)) for x in fmap.next)
    return "\n".join(lines) + "\n"


def import_table(text: str) -> tuple[FiniteMap, int]:
    """Inverse of :func:`export_table`; the cycle type is recovered by walking cycles."""
    lines = text.split()
    size, N = int(lines[0]), int(lines[1])
    nxt = np.array([int(x) for x in lines[2 : 2 + size]], dtype=np.int64)
    if len(nxt) != size or (size and (nxt.min() < 0 or nxt.max() >= size)):
        raise ValueError("malformed function table")
    seen = np.zeros(size, dtype=bool)
    cycles = Counter()
    for x in range(size):
        if seen[x]:
            continue
        path = []
        y = x
        while not seen[y]:
            seen[y] = True
            path.append(y)
            y = int(nxt[y])
        if not path or y != path[0]:
            raise ValueError("function table is not a permutation")
        cycles[len(path)] += 1
    return FiniteMap(dict(sorted(cycles.items())), nxt, None), N
