"""Verification checks run by ``fibcube verify``.

Each check returns ``(passed, details)``; :func:`run_verification` times them
and collects a :class:`VerificationReport`.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from .bitstring import (
    Family,
    count_by_weight,
    decompose_one_blocks,
    decompose_zero_blocks,
    generate,
)
from .graph import verify_isometric
from .hypercube import oracle_maximal
from .maximal import binom, count_f, count_g, enumerate_maximal, enumerate_tops, nonzero_range
from .poly import CountingPolynomial, poly_by_formula, poly_by_recurrence, poly_by_series

log = logging.getLogger(__name__)

FAMILIES = (Family.FIBONACCI, Family.LUCAS)
ISOMETRY_MAX = 10
DECOMPOSITION_MAX = 14
WEIGHT_MAX = 16
FORMULA_CAP = 64

GOLDEN = {
    Family.FIBONACCI: ["1", "x", "2x", "x^2+x", "3x^2", "x^3+3x^2", "4x^3+x^2"],
    Family.LUCAS: ["1", "1", "2x", "3x", "2x^2", "5x^2", "2x^3+3x^2"],
}

CheckResult = Tuple[bool, str]


@dataclass
class Check:
    name: str
    params: Dict[str, object]
    passed: bool
    details: str
    seconds: float = 0.0

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"


@dataclass
class VerificationReport:
    checks: List[Check] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(c.passed for c in self.checks)

    @property
    def failed(self) -> int:
        return len(self.checks) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def lines(self) -> List[str]:
        """Deterministic text rendering; timings are logged, not printed here."""
        out = []
        for c in self.checks:
            params = " ".join(f"{k}={v}" for k, v in c.params.items())
            out.append(f"{c.status.upper():4} {c.name} [{params}] {c.details}")
        out.append(f"summary: {self.passed} passed, {self.failed} failed")
        return out

    def to_json(self) -> Dict:
        return {
            "checks": [
                {"name": c.name, "params": c.params, "status": c.status, "details": c.details}
                for c in self.checks
            ],
            "summary": {"passed": self.passed, "failed": self.failed},
        }


# -- individual checks -------------------------------------------------------

def check_golden_table(counters: Dict[Family, Callable]) -> CheckResult:
    bad = []
    for family in FAMILIES:
        for n, expected in enumerate(GOLDEN[family]):
            got = {
                "formula": str(poly_by_formula(n, family, counters[family])),
                "recurrence": str(poly_by_recurrence(n, family)),
                "series": str(poly_by_series(n, family)),
            }
            bad += [f"{family.symbol}{n} {m}={s}" for m, s in got.items() if s != expected]
    return not bad, "; ".join(bad) or "table n=0..6 reproduced"


def check_oracle_equivalence(n_max: int, family: Family) -> CheckResult:
    for n in range(n_max + 1):
        oracle = oracle_maximal(n, family, cap=max(n_max, 0))
        direct = enumerate_maximal(n, family)
        if oracle != direct:
            return False, f"mismatch at n={n}: oracle {len(oracle)} cubes, characterization {len(direct)}"
    return True, f"identical cube lists for n=0..{n_max}"


def check_triple_agreement(n_max: int, family: Family, counter: Callable) -> CheckResult:
    for n in range(n_max + 1):
        a = poly_by_formula(n, family, counter)
        b = poly_by_recurrence(n, family)
        c = poly_by_series(n, family)
        if not a == b == c:
            return False, f"n={n}: formula {a}, recurrence {b}, series {c}"
    return True, f"agree for n=0..{n_max}"


def check_counts_vs_tops(n_max: int, family: Family, counter: Callable) -> CheckResult:
    start = 0 if family is Family.FIBONACCI else 2
    for n in range(start, n_max + 1):
        for p in range(0 if family is Family.FIBONACCI else 1, n + 1):
            k = len(enumerate_tops(n, p, family))
            if k != counter(n, p):
                return False, f"n={n} p={p}: {k} tops vs count {counter(n, p)}"
    return True, f"n={start}..{n_max}"


def check_lucas_integrality(n_max: int, counter: Callable) -> CheckResult:
    for n in range(1, n_max + 1):
        for p in range(1, n + 1):
            if p * counter(n, p) != n * binom(p, n - 2 * p):
                return False, f"n={n} p={p}"
    return True, f"p*g(n,p) = n*C(p,n-2p) for 1<=p<=n<={n_max}"


def check_pascal(n_max: int, family: Family, counter: Callable) -> CheckResult:
    start = 3 if family is Family.FIBONACCI else 5
    for n in range(start, n_max + 1):
        for p in range(1, n + 1):
            if counter(n, p) != counter(n - 2, p - 1) + counter(n - 3, p - 1):
                return False, f"n={n} p={p}"
    return True, f"n={start}..{n_max}"


def check_ranges(n_max: int, family: Family, counter: Callable) -> CheckResult:
    for n in range(2, n_max + 1):
        low, high = nonzero_range(n, family)
        for p in range(n + 1):
            if (counter(n, p) != 0) != (low <= p <= high):
                return False, f"n={n} p={p}: count {counter(n, p)}, range [{low},{high}]"
    return True, f"n=2..{n_max}"


def check_degrees(n_max: int, family: Family, counter: Callable) -> CheckResult:
    for n in range(n_max + 1):
        deg = poly_by_formula(n, family, counter).degree
        if family is Family.FIBONACCI and deg != (n + 1) // 2:
            return False, f"n={n}: degree {deg} != {(n + 1) // 2}"
        if family is Family.LUCAS and deg > n // 2:
            return False, f"n={n}: degree {deg} > {n // 2}"
    return True, f"n=0..{n_max}"


def check_isometry(n_max: int, family: Family) -> CheckResult:
    for n in range(n_max + 1):
        if not verify_isometric(n, family):
            return False, f"n={n} not isometric"
    return True, f"n=0..{n_max}"


def check_weight_counts(n_max: int) -> CheckResult:
    for n in range(n_max + 1):
        strings = generate(n, Family.FIBONACCI)
        for w in range(n + 1):
            brute = sum(1 for s in strings if s.weight == w)
            if brute != count_by_weight(n, w, Family.FIBONACCI):
                return False, f"n={n} w={w}"
    return True, f"C(n-w+1,w) for n=0..{n_max}"


def check_decompositions(n_max: int, family: Family) -> CheckResult:
    for n in range(n_max + 1):
        for s in generate(n, family):
            z = decompose_zero_blocks(s, family)
            o = decompose_one_blocks(s, family)
            if z.to_bitstring() != s or o.to_bitstring() != s:
                return False, f"round trip failed for {s}"
            if family is Family.LUCAS and z.p >= 1 and z.l[0] + z.l[-1] < 1:
                return False, f"l0+lp < 1 for {s}"
            if family is Family.LUCAS and o.k[0] + o.k[-1] > 1:
                return False, f"k0+kq > 1 for {s}"
    return True, f"n=0..{n_max}"


def check_total_cubes(n_max: int, family: Family, counter: Callable) -> CheckResult:
    for n in range(n_max + 1):
        total = poly_by_formula(n, family, counter)(1)
        if total != len(enumerate_maximal(n, family)):
            return False, f"n={n}: C'(1)={total}"
    return True, f"C'(1) = number of maximal cubes for n=0..{n_max}"


# -- driver ------------------------------------------------------------------

def run_verification(
    oracle_max: int,
    n_max: int,
    counters: Optional[Dict[Family, Callable]] = None,
) -> VerificationReport:
    """Run every check; ``counters`` substitutes the count functions under test."""
    counters = dict(counters or {Family.FIBONACCI: count_f, Family.LUCAS: count_g})
    plan: List[Tuple[str, Dict[str, object], Callable[[], CheckResult]]] = [
        ("golden_table", {}, lambda: check_golden_table(counters)),
    ]
    for fam in FAMILIES:
        c = counters[fam]
        tag = fam.symbol
        plan += [
            ("oracle_equivalence", {"family": tag, "n_max": oracle_max},
             lambda fam=fam: check_oracle_equivalence(oracle_max, fam)),
            ("triple_agreement", {"family": tag, "n_max": n_max},
             lambda fam=fam, c=c: check_triple_agreement(n_max, fam, c)),
            ("counts_vs_tops", {"family": tag, "n_max": min(n_max, 20)},
             lambda fam=fam, c=c: check_counts_vs_tops(min(n_max, 20), fam, c)),
            ("pascal_step", {"family": tag, "n_max": n_max},
             lambda fam=fam, c=c: check_pascal(n_max, fam, c)),
            ("nonzero_range", {"family": tag, "n_max": n_max},
             lambda fam=fam, c=c: check_ranges(n_max, fam, c)),
            ("degree", {"family": tag, "n_max": n_max},
             lambda fam=fam, c=c: check_degrees(n_max, fam, c)),
            ("total_cubes", {"family": tag, "n_max": min(n_max, 14)},
             lambda fam=fam, c=c: check_total_cubes(min(n_max, 14), fam, c)),
            ("isometry", {"family": tag, "n_max": min(n_max, ISOMETRY_MAX)},
             lambda fam=fam: check_isometry(min(n_max, ISOMETRY_MAX), fam)),
            ("decomposition_round_trip", {"family": tag, "n_max": min(n_max, DECOMPOSITION_MAX)},
             lambda fam=fam: check_decompositions(min(n_max, DECOMPOSITION_MAX), fam)),
        ]
    plan += [
        ("lucas_integrality", {"n_max": n_max},
         lambda: check_lucas_integrality(n_max, counters[Family.LUCAS])),
        ("weight_counts", {"n_max": min(n_max, WEIGHT_MAX)},
         lambda: check_weight_counts(min(n_max, WEIGHT_MAX))),
    ]

    report = VerificationReport()
    for name, params, fn in plan:
        t0 = time.perf_counter()
        passed, details = fn()
        elapsed = time.perf_counter() - t0
        log.info("%s %s %.3fs", name, params, elapsed)
        report.checks.append(Check(name, params, passed, details, elapsed))
    return report
