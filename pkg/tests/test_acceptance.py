"""End-to-end acceptance checks; one PASS/FAIL line per criterion.

Run with `pytest -s tests/test_acceptance.py` to see the lines.
"""

import time

import pytest
from conftest import brute_class_recursive

from fibcomp import (
    Cls,
    CutJoinSeq,
    Origin,
    TaggedSource,
    conjugate,
    count,
    count_by_parts,
    decode,
    encode,
    enumerate_compositions,
    enumerate_range,
    fib,
    rank,
    thm4_forward,
    unrank,
    verify_bijection,
)
from fibcomp.bijections import BIJECTIONS
from fibcomp.cli import main
from fibcomp.identities import check_eq1, check_eq2, check_eq3, check_eq4


def _report(num: int, name: str, ok: bool) -> None:
    print(f"\nACCEPTANCE {num} {name}: {'PASS' if ok else 'FAIL'}")
    assert ok, f"acceptance criterion {num} ({name}) failed"


def test_criterion_1_counting_closed_forms():
    start = time.time()
    ok = True
    for n in range(1, 23):
        ok &= sum(1 for _ in enumerate_compositions(Cls.PARTS12, n)) == fib(n + 1)
        ok &= sum(1 for _ in enumerate_compositions(Cls.ODD, n)) == fib(n)
        ok &= sum(1 for _ in enumerate_compositions(Cls.ALL, n)) == 2 ** (n - 1)
        if n >= 2:
            ok &= sum(1 for _ in enumerate_compositions(Cls.MIN2, n)) == fib(n - 1)
    for n in range(1, 301):
        ok &= count(Cls.PARTS12, n) == fib(n + 1)
        ok &= count(Cls.ODD, n) == fib(n)
        ok &= count(Cls.ALL, n) == 2 ** (n - 1)
        if n >= 2:
            ok &= count(Cls.MIN2, n) == fib(n - 1)
    elapsed = time.time() - start
    ok &= elapsed < 10.0
    _report(1, f"counting closed forms ({elapsed:.1f}s)", ok)


def test_criterion_2_paper_fixtures():
    ok = set(enumerate_compositions(Cls.ODD, 5)) == {
        (5,), (3, 1, 1), (1, 3, 1), (1, 1, 3), (1, 1, 1, 1, 1),
    }
    ok &= set(enumerate_compositions(Cls.MIN2, 5)) == {(5,), (3, 2), (2, 3)}
    ok &= count(Cls.ALL, 5) == 16
    ok &= encode((3, 1, 1)).letters == "JJCC"
    ok &= encode((2, 2, 1)).letters == "JCJC"
    ok &= encode((5,)).letters == "JJJJ"
    ok &= conjugate((3, 1, 1)) == (1, 1, 3) and conjugate((1, 1, 3)) == (3, 1, 1)
    ok &= conjugate((2, 3)) == (1, 2, 1, 1) and conjugate((1, 2, 1, 1)) == (2, 3)
    from test_bijections import FIGURE_ROWS

    for forward, backward, n, rows in FIGURE_ROWS:
        for origin, source, image in rows:
            src = TaggedSource(origin, source)
            ok &= forward(src, n) == image
            ok &= backward(image, n) == src
    _report(2, "paper fixtures bit-exact", ok)


def test_criterion_3_bijection_soundness():
    start = time.time()
    ok = True
    for name, spec in BIJECTIONS.items():
        for n in range(spec.min_n, 23):
            report = verify_bijection(name, n, bound=22)
            ok &= report.passed
    elapsed = time.time() - start
    ok &= elapsed < 30.0
    _report(3, f"bijection soundness ({elapsed:.1f}s)", ok)


def test_criterion_4_conjugation():
    ok = True
    for n in range(1, 17):
        image = set()
        for c in enumerate_compositions(Cls.ALL, n):
            conj = conjugate(c)
            ok &= conjugate(conj) == c
            ok &= len(c) + len(conj) == n + 1
            image.add(conj)
        ok &= len(image) == 2 ** (n - 1)
    _report(4, "conjugation involution and cardinality", ok)


def test_criterion_5_identities():
    ok = check_eq1(30, enum_limit=22).passed
    ok &= check_eq2(30, enum_limit=22).passed
    ok &= check_eq3(30, enum_limit=22).passed
    ok &= check_eq4(30, parts_limit=24).passed
    # term-by-term grounding for eq4, against an oracle independent of the DP
    for n in range(1, 25):
        tally = {}
        for c in brute_class_recursive(Cls.MIN2, n + 1):
            tally[len(c)] = tally.get(len(c), 0) + 1
        ok &= tally == count_by_parts(Cls.MIN2, n + 1)
    _report(5, "Fibonacci identities", ok)


def test_criterion_6_rank_unrank():
    ok = True
    for cls in Cls:
        for n in range(0, 19):
            for i, c in enumerate(enumerate_compositions(cls, n)):
                ok &= rank(cls, c) == i and unrank(cls, n, i) == c
        # sharding reproduces one sequential pass
        n = 14
        total = count(cls, n)
        step = max(1, total // 7)
        merged = []
        for lo in range(0, total, step):
            merged.extend(enumerate_range(cls, n, lo, lo + step))
        ok &= merged == list(enumerate_compositions(cls, n))
    _report(6, "rank/unrank round trips and sharding", ok)


def test_criterion_7_cli_contract(capsys):
    cases = [
        (["enumerate", "min2", "5"], 0, "2,3\n3,2\n5\n"),
        (["enumerate", "odd", "2"], 0, "1,1\n"),
        (["enumerate", "all", "0"], 0, "-\n"),
        (["count", "parts12", "5"], 0, "8\n"),
        (["count", "odd", "5"], 0, "5\n"),
        (["count", "all", "0"], 0, "1\n"),
        (["codec", "encode", "2,2,1"], 0, "JCJC\n"),
        (["codec", "conjugate", "2,3"], 0, "1,2,1,1\n"),
        (["codec", "decode", "JJJJ", "--board", "5"], 0, "5\n"),
        (["map", "thm4", "fwd", "from-odd", "1,3,1", "--n", "5"], 0, "1,2,1,1\n"),
        (["map", "thm4", "bwd", "1,1,1,2", "--n", "5"], 0, "from-min2 5\n"),
        (["map", "prop1", "fwd", "from-n-minus-1", "1", "--n", "2"], 1, None),
        (["verify", "all", "10"], 0, None),
        (["identity", "pow2", "5"], 0, None),
        (["render", "1", "--ascii"], 0, "|#|\n"),
        (["render", "3,1,1", "--ascii", "--annotate", "cutjoin"], 0, None),
        (["render", "2,3", "--svg", "--shade", "even-gray"], 0, None),
        (["verify", "prop3", "3"], 2, None),
        (["codec", "encode", "bogus"], 2, None),
        (["codec", "conjugate", "-"], 1, None),
    ]
    ok = True
    details = []
    for argv, want_code, want_out in cases:
        code = main(argv)
        out = capsys.readouterr().out
        if code != want_code or (want_out is not None and out != want_out):
            ok = False
            details.append((argv, code, out))
    code = main(["verify", "thm4", "12"])
    out = capsys.readouterr().out
    ok &= code == 0 and len(out.splitlines()) == 11
    code = main(["identity", "pow2", "5"])
    out = capsys.readouterr().out
    ok &= "5 16 16 ok" in out.splitlines()
    with capsys.disabled():
        _report(7, f"CLI determinism and exit codes {details or ''}", ok)
