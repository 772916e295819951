"""Counting polynomials of maximal hypercubes, computed three independent ways.

* from the closed-form coefficient counts,
* from the order-3 recurrence ``P_n = x (P_{n-2} + P_{n-3})`` and its base rows,
* by expanding the bivariate generating function ``N(x, y) / (1 - x y^2 (1 + y))``
  in powers of ``y``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .bitstring import Family
from .exceptions import DomainError
from .maximal import count_f, count_g

Counter = Callable[[int, int], int]


def _trim(coeffs: Sequence[int]) -> Tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class CountingPolynomial:
    """Integer polynomial in ``x``; ``coeffs[p]`` is the coefficient of ``x**p``.

    Trailing zeros are trimmed so equality is coefficient-vector equality.
    """

    coeffs: Tuple[int, ...] = ()
    n: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, CountingPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __getitem__(self, p: int) -> int:
        return self.coeffs[p] if 0 <= p < len(self.coeffs) else 0

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def __str__(self) -> str:
        terms = []
        for p in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[p]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            c = abs(c)
            if p == 0:
                body = str(c)
            else:
                body = ("" if c == 1 else str(c)) + ("x" if p == 1 else f"x^{p}")
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        return out + "".join(sign + body for sign, body in terms[1:])

    def to_json(self) -> Dict:
        return {"n": self.n, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj: Dict) -> "CountingPolynomial":
        coeffs = obj["coeffs"]
        if not all(isinstance(c, int) for c in coeffs):
            raise DomainError(f"coefficients must be integers: {coeffs!r}")
        return cls(tuple(coeffs), obj.get("n"))


@dataclass(frozen=True)
class SeriesTable:
    """Rows ``0..max_n`` of a generating function expanded in ``y``."""

    family: Family
    rows: Tuple[CountingPolynomial, ...]

    @property
    def max_n(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, m: int) -> CountingPolynomial:
        return self.rows[m]


def _counter(family: Family) -> Counter:
    return count_f if family is Family.FIBONACCI else count_g


def _maximal_family(family) -> Family:
    family = Family.parse(family)
    if family is Family.HYPERCUBE:
        raise DomainError("counting polynomials are defined for fibonacci and lucas only")
    return family


def _check_n(n: int) -> None:
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")


def poly_by_formula(n: int, family: "Family | str", counter: Optional[Counter] = None) -> CountingPolynomial:
    """Polynomial whose coefficients come from the closed-form counts.

    ``counter`` overrides the count function (used to exercise failure paths).
    """
    family = _maximal_family(family)
    _check_n(n)
    counter = counter or _counter(family)
    return CountingPolynomial(tuple(counter(n, p) for p in range(n + 1)), n)


# Base rows as coefficient tuples; the recurrence takes over after them.
_RECURRENCE_BASE = {
    Family.FIBONACCI: [(1,), (0, 1), (0, 2)],
    Family.LUCAS: [(1,), (1,), (0, 2), (0, 3), (0, 0, 2)],
}

# Numerator of the generating function: coefficient of y^m as a polynomial in x.
_GF_NUMERATOR = {
    Family.FIBONACCI: [(1,), (0, 1), (0, 1)],
    Family.LUCAS: [(1,), (1,), (0, 1), (0, 1), (0, -1)],
}


def _add(a: Sequence[int], b: Sequence[int]) -> List[int]:
    size = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)]


def _times_x(a: Sequence[int]) -> List[int]:
    return [0, *a] if a else []


def _step(rows: List[Sequence[int]], m: int) -> List[int]:
    """``x * (row[m-2] + row[m-3])`` with missing rows treated as zero."""
    r2 = rows[m - 2] if m >= 2 else ()
    r3 = rows[m - 3] if m >= 3 else ()
    return _times_x(_add(r2, r3))


def poly_by_recurrence(n: int, family: "Family | str") -> CountingPolynomial:
    family = _maximal_family(family)
    _check_n(n)
    rows: List[Sequence[int]] = list(_RECURRENCE_BASE[family])
    for m in range(len(rows), n + 1):
        rows.append(_step(rows, m))
    return CountingPolynomial(tuple(rows[n]), n)


def expand_generating_function(max_n: int, family: "Family | str") -> SeriesTable:
    """Coefficients of ``y^0 .. y^max_n`` of the family's generating function.

    Multiplying through by the denominator ``1 - x y^2 (1 + y)`` gives
    ``row_m = x (row_{m-2} + row_{m-3}) + numerator_m``.
    """
    family = _maximal_family(family)
    _check_n(max_n)
    numerator = _GF_NUMERATOR[family]
    rows: List[Sequence[int]] = []
    for m in range(max_n + 1):
        row = _step(rows, m)
        if m < len(numerator):
            row = _add(row, numerator[m])
        rows.append(row)
    return SeriesTable(family, tuple(CountingPolynomial(tuple(r), m) for m, r in enumerate(rows)))


def poly_by_series(n: int, family: "Family | str") -> CountingPolynomial:
    return expand_generating_function(n, family)[n]


METHODS = {
    "formula": poly_by_formula,
    "recurrence": poly_by_recurrence,
    "series": poly_by_series,
}
