"""Acceptance criteria, one test each, with exact checks and wall-time budgets.

A PASS/FAIL line per criterion is printed in the pytest terminal summary; run
``python tests/test_acceptance.py`` for the same lines without pytest.
"""

import time

import pytest

from fibcube.bitstring import (
    count_by_weight,
    decompose_one_blocks,
    decompose_zero_blocks,
    generate,
)
from fibcube.graph import build, verify_isometric
from fibcube.hypercube import oracle_maximal
from fibcube.maximal import binom, count_f, count_g, enumerate_maximal, enumerate_tops
from fibcube.poly import expand_generating_function, poly_by_formula, poly_by_recurrence

FAMILIES = ("fibonacci", "lucas")
GOLDEN = {
    "fibonacci": ["1", "x", "2x", "x^2+x", "3x^2", "x^3+3x^2", "4x^3+x^2"],
    "lucas": ["1", "1", "2x", "3x", "2x^2", "5x^2", "2x^3+3x^2"],
}

RESULTS = []


def _criterion(number, title, budget):
    def decorate(fn):
        def wrapper():
            t0 = time.perf_counter()
            failure = None
            try:
                fn()
            except AssertionError as exc:
                failure = exc
            elapsed = time.perf_counter() - t0
            ok = failure is None and elapsed < budget
            RESULTS.append(
                f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({elapsed:.2f}s, budget {budget:g}s)"
            )
            if failure is not None:
                raise failure
            assert elapsed < budget, f"took {elapsed:.2f}s, budget {budget}s"

        wrapper.__name__ = fn.__name__
        return wrapper

    return decorate


@_criterion(1, "golden polynomial table, three methods", 1.0)
def test_golden_table():
    for family in FAMILIES:
        series = expand_generating_function(6, family)
        for n, expected in enumerate(GOLDEN[family]):
            assert str(poly_by_formula(n, family)) == expected
            assert str(poly_by_recurrence(n, family)) == expected
            assert str(series[n]) == expected


@_criterion(2, "oracle equals characterization, n <= 12", 60.0)
def test_oracle_equivalence():
    for family in FAMILIES:
        for n in range(13):
            assert oracle_maximal(n, family, cap=12) == enumerate_maximal(n, family), (family, n)


@_criterion(3, "triple-method agreement, n <= 20", 1.0)
def test_triple_agreement():
    for family in FAMILIES:
        series = expand_generating_function(20, family)
        for n in range(21):
            assert poly_by_formula(n, family).coeffs == poly_by_recurrence(n, family).coeffs == series[n].coeffs


@_criterion(4, "closed forms vs enumeration and Lucas integer identity", 1.0)
def test_closed_forms():
    for n in range(21):
        for p in range(n + 1):
            assert count_f(n, p) == binom(p + 1, n - 2 * p + 1)
            assert len(enumerate_tops(n, p, "fibonacci")) == count_f(n, p)
    for n in range(1, 41):
        for p in range(1, n + 1):
            assert p * count_g(n, p) == n * binom(p, n - 2 * p)


@_criterion(5, "Pascal steps of both recurrences, n <= 30", 1.0)
def test_pascal_steps():
    for n in range(3, 31):
        for p in range(1, n + 1):
            assert count_f(n, p) == count_f(n - 2, p - 1) + count_f(n - 3, p - 1)
    for n in range(5, 31):
        for p in range(1, n + 1):
            assert count_g(n, p) == count_g(n - 2, p - 1) + count_g(n - 3, p - 1)


@_criterion(6, "nonzero ranges and degrees", 1.0)
def test_ranges_and_degrees():
    for n in range(2, 41):
        for p in range(n + 1):
            assert (count_f(n, p) != 0) == (-(-n // 3) <= p <= (n + 1) // 2), (n, p)
            assert (count_g(n, p) != 0) == (-(-n // 3) <= p <= n // 2), (n, p)
    for n in range(31):
        assert poly_by_formula(n, "fibonacci").degree == (n + 1) // 2


@_criterion(7, "isometry, weight counts, decompositions", 30.0)
def test_structure():
    for family in FAMILIES:
        for n in range(11):
            assert verify_isometric(n, family), (family, n)
    for n in range(17):
        strings = generate(n, "fibonacci")
        for w in range(n + 1):
            assert sum(s.weight == w for s in strings) == count_by_weight(n, w, "fibonacci") == binom(n - w + 1, w)
    for family in FAMILIES:
        for n in range(15):
            for s in generate(n, family):
                z = decompose_zero_blocks(s, family)
                o = decompose_one_blocks(s, family)
                assert z.to_bitstring() == s and o.to_bitstring() == s
                if family == "lucas":
                    assert z.p == 0 or z.l[0] + z.l[-1] >= 1
                    assert o.k[0] + o.k[-1] <= 1


@_criterion(8, "vertex counts of the drawn cubes", 1.0)
def test_vertex_counts():
    sizes = {(4, "fibonacci"): 8, (5, "fibonacci"): 13, (6, "fibonacci"): 21, (5, "lucas"): 11, (6, "lucas"): 18}
    for (n, family), size in sizes.items():
        assert len(build(n, family).vertices) == size


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except AssertionError:
                pass
    print("\n".join(RESULTS))
