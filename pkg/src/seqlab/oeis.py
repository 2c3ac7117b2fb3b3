"""OEIS b-file parsing, a local fixture cache and generator cross-checks.

Lookup order in :func:`fetch`: bundled fixtures shipped with the package, then
the cache directory (``$SEQLAB_CACHE_DIR`` or ``~/.cache/seqlab``), then the
network, which is off unless ``allow_network=True``.
"""
from __future__ import annotations

import os
import re
import tempfile
import urllib.request
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import BFileFormatError, BFileNotFoundError, NetworkDisabledError
from .sequences import SequenceSpec

CACHE_ENV = "SEQLAB_CACHE_DIR"
_A_NUMBER = re.compile(r"^A\d{6}$")


@dataclass(frozen=True)
class BFile:
    a_number: str
    entries: tuple[tuple[int, int], ...]
    source: str = "bundled-fixture"

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    @property
    def first_index(self) -> int:
        return self.entries[0][0]

    def to_text(self) -> str:
        return "".join(f"{i} {v}\n" for i, v in self.entries)


def parse_bfile(text: str, a_number: str = "", source: str = "bundled-fixture") -> BFile:
    entries = []
    last = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileFormatError(lineno, f"expected 'index value', got {raw!r}")
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileFormatError(lineno, f"non-integer token in {raw!r}") from None
        if last is not None and index <= last:
            kind = "duplicate" if index == last else "non-increasing"
            raise BFileFormatError(lineno, f"{kind} index {index} after {last}")
        entries.append((index, value))
        last = index
    return BFile(a_number, tuple(entries), source)


def _check_a_number(a_number: str) -> str:
    a_number = a_number.strip().upper()
    if not _A_NUMBER.match(a_number):
        raise BFileNotFoundError(f"malformed A-number {a_number!r}")
    return a_number


def _filename(a_number: str) -> str:
    return f"b{a_number[1:]}.txt"


def cache_dir(path=None) -> Path:
    if path is not None:
        return Path(path)
    env = os.environ.get(CACHE_ENV)
    return Path(env) if env else Path.home() / ".cache" / "seqlab"


def bundled_numbers() -> list[str]:
    root = resources.files("seqlab") / "fixtures"
    return sorted(
        "A" + entry.name[1:7] for entry in root.iterdir() if re.match(r"b\d{6}\.txt$", entry.name)
    )


def _write_atomic(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def fetch(a_number: str, cache=None, allow_network: bool = False, timeout: float = 20) -> BFile:
    a_number = _check_a_number(a_number)
    name = _filename(a_number)
    bundled = resources.files("seqlab") / "fixtures" / name
    if bundled.is_file():
        return parse_bfile(bundled.read_text(), a_number, "bundled-fixture")
    cached = cache_dir(cache) / name
    if cached.is_file():
        return parse_bfile(cached.read_text(), a_number, "cache")
    if not allow_network:
        raise NetworkDisabledError(f"{a_number} is not bundled or cached and network is off")
    url = f"https://oeis.org/{a_number}/{name}"
    try:
        with urllib.request.urlopen(url, timeout=timeout) as resp:
            text = resp.read().decode()
    except OSError as exc:
        raise BFileNotFoundError(f"{a_number}: {exc}") from exc
    bfile = parse_bfile(text, a_number, "network")
    _write_atomic(cached, bfile.to_text())
    return bfile


@dataclass(frozen=True)
class CrossCheck:
    spec: SequenceSpec
    a_number: str
    compared: int
    mismatch: tuple[int, int, int] | None = None
    probable_shift: int | None = None

    @property
    def ok(self) -> bool:
        return self.mismatch is None and self.compared > 0

    def describe(self) -> str:
        if self.ok:
            return f"{self.spec.label} vs {self.a_number}: {self.compared} terms equal"
        if self.mismatch is None:
            return f"{self.spec.label} vs {self.a_number}: nothing to compare"
        n, ours, theirs = self.mismatch
        msg = f"{self.spec.label} vs {self.a_number}: n={n} generator {ours} != OEIS {theirs}"
        if self.probable_shift is not None:
            msg += f" (probable offset error: shift {self.probable_shift:+d} aligns the terms)"
        return msg

    def as_dict(self) -> dict:
        return {
            "spec": self.spec.label,
            "a_number": self.a_number,
            "compared": self.compared,
            "ok": self.ok,
            "mismatch": None if self.mismatch is None else [str(x) for x in self.mismatch],
            "probable_shift": self.probable_shift,
        }


def _pairs(spec, link, table, max_terms, extra_shift=0):
    n = spec.offset
    out = []
    limit = max(table) if table else -1
    while len(out) < max_terms:
        idx = link.index(n) + extra_shift
        if idx > limit:
            break
        if idx in table:
            out.append((n, spec(n), link.value(n, table[idx])))
        n += 1
    return out


def cross_check(spec: SequenceSpec, bfile: BFile, max_terms: int = 30) -> CrossCheck:
    link = spec.oeis
    if link is None:
        raise BFileNotFoundError(f"{spec.label} has no OEIS link")
    table = bfile.as_dict()
    pairs = _pairs(spec, link, table, max_terms)
    for i, (n, ours, theirs) in enumerate(pairs):
        if ours != theirs:
            shift = _probable_shift(spec, link, table) if i == 0 else None
            return CrossCheck(spec, bfile.a_number, i, (n, ours, theirs), shift)
    return CrossCheck(spec, bfile.a_number, len(pairs))


def _probable_shift(spec, link, table, span=3, need=10):
    for shift in sorted(range(-span, span + 1), key=abs):
        if shift == 0:
            continue
        pairs = _pairs(spec, link, table, need, shift)
        if len(pairs) >= need and all(a == b for _, a, b in pairs):
            return shift
    return None
