import hashlib
import subprocess
import sys
from dataclasses import replace
from pathlib import Path

import pytest

from seqlab.errors import BFileFormatError, BFileNotFoundError, NetworkDisabledError
from seqlab.oeis import BFile, bundled_numbers, cross_check, fetch, parse_bfile
from seqlab.sequences import REGISTRY, OeisLink, SequenceSpec

ROOT = Path(__file__).resolve().parent.parent
LINKED = sorted(name for name, spec in REGISTRY.items() if spec.oeis is not None)


def test_parse_examples():
    assert parse_bfile("1 5\n2 73\n").entries == ((1, 5), (2, 73))
    assert parse_bfile("# comment\n0 1\n").entries == ((0, 1),)
    with pytest.raises(BFileFormatError) as exc:
        parse_bfile("1 5\n1 6\n")
    assert exc.value.lineno == 2 and "duplicate" in str(exc.value)


@pytest.mark.parametrize("text,line", [
    ("1 5\n0 3\n", 2), ("1 x\n", 1), ("1 2 3\n", 1), ("# ok\n\n1.5 2\n", 3), ("7\n", 1)])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(BFileFormatError) as exc:
        parse_bfile(text)
    assert exc.value.lineno == line


def test_parse_big_and_negative_values():
    big = 10**200 + 7
    b = parse_bfile(f"0 -3\n  1   {big}  \n")
    assert b.as_dict() == {0: -3, 1: big}
    assert parse_bfile(b.to_text()).entries == b.entries


def test_fetch_sources(tmp_path, monkeypatch):
    assert fetch("A005259").source == "bundled-fixture"
    with pytest.raises(NetworkDisabledError):
        fetch("A999999", cache=tmp_path)
    (tmp_path / "b999998.txt").write_text("0 1\n1 1\n2 2\n")
    got = fetch("A999998", cache=tmp_path)
    assert got.source == "cache" and got.as_dict()[2] == 2
    monkeypatch.setenv("SEQLAB_CACHE_DIR", str(tmp_path))
    assert fetch("a999998").source == "cache"
    with pytest.raises(BFileNotFoundError):
        fetch("12345")


def test_bundled_fixture_wins_over_cache(tmp_path):
    (tmp_path / "b001006.txt").write_text("0 99\n")
    assert fetch("A001006", cache=tmp_path).source == "bundled-fixture"


def test_cached_motzkin(tmp_path):
    # a cache entry for an A-number is used as-is
    text = (ROOT / "src/seqlab/fixtures/b001006.txt").read_text()
    (tmp_path / "b901006.txt").write_text(text)
    b = fetch("A901006", cache=tmp_path)
    assert b.source == "cache"
    assert cross_check(REGISTRY["motzkin"], replace(b, a_number="A001006"), 30).ok


@pytest.mark.parametrize("name", LINKED)
def test_cross_check_every_linked_spec(name):
    spec = REGISTRY[name]
    result = cross_check(spec, fetch(spec.oeis.a_number), 30)
    assert result.ok and result.compared == 30, result.describe()


def test_cross_check_examples():
    assert cross_check(REGISTRY["apery1"], fetch("A005259"), 30).compared == 30
    assert cross_check(REGISTRY["trinomial"], fetch("A002426"), 50).compared == 50
    lucas = REGISTRY["lucas"]
    assert lucas.oeis.a_number == "A000032" and lucas(1) == 1 and lucas(2) == 3
    assert cross_check(lucas, fetch("A000032"), 30).ok


def test_offset_error_detected():
    # link Lucas to A000032 without aligning the offsets: term 0 disagrees, a shift fixes it
    wrong = SequenceSpec("lucas-like", (1, 3), "lucas-misaligned", OeisLink("A000032", shift=-1))
    result = cross_check(wrong, fetch("A000032"), 30)
    assert not result.ok
    assert result.mismatch[0] == 1 and result.probable_shift == 1
    assert "probable offset error" in result.describe()


def test_value_error_is_not_an_offset_error():
    bad = parse_bfile("".join(f"{n} {REGISTRY['catalan'](n) + (n == 7)}\n" for n in range(40)))
    result = cross_check(REGISTRY["catalan"], replace(bad, a_number="A000108"), 30)
    assert result.mismatch[0] == 7 and result.probable_shift is None


def test_fixtures_cover_links():
    bundled = set(bundled_numbers())
    assert {REGISTRY[name].oeis.a_number for name in LINKED} <= bundled
    assert "A001263" in bundled


def test_narayana_triangle_fixture():
    from seqlab.sequences import narayana

    flat = fetch("A001263").as_dict()
    i = 1
    for n in range(1, 16):
        for k in range(1, n + 1):
            assert narayana(n, k) == flat[i]
            i += 1


def test_fixtures_byte_stable():
    result = subprocess.run([sys.executable, str(ROOT / "scripts/make_fixtures.py"), "--check"],
                            capture_output=True, text=True)
    assert result.returncode == 0, result.stdout + result.stderr


def test_parsed_fixtures_match_files():
    again = hashlib.sha256()
    for a in bundled_numbers():
        again.update(fetch(a).to_text().encode())
    # to_text drops the header comments only
    stripped = hashlib.sha256()
    for name in sorted((ROOT / "src/seqlab/fixtures").glob("b*.txt")):
        stripped.update("".join(l for l in name.read_text().splitlines(True)
                                if not l.startswith("#")).encode())
    assert stripped.hexdigest() == again.hexdigest()


def test_cache_write_is_atomic(tmp_path):
    from seqlab.oeis import _write_atomic

    target = tmp_path / "sub" / "b000001.txt"
    _write_atomic(target, "0 1\n")
    assert target.read_text() == "0 1\n"
    assert [p.name for p in target.parent.iterdir()] == ["b000001.txt"]
