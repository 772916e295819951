"""Maximal hypercubes generated directly from their top vertices, and their counts.

Every maximal cube of a Fibonacci or Lucas cube has bottom ``0^n``; its top is
``0^{l0} 1 0^{l1} 1 ... 1 0^{lp}`` where the gaps obey

* Fibonacci: ``l0, lp in {0, 1}`` and inner gaps in ``{1, 2}``;
* Lucas: ``0 <= l0, lp <= 2`` with ``1 <= l0 + lp <= 2`` and inner gaps in ``{1, 2}``.

The cube is then the set of strings below its top.
"""

from __future__ import annotations

import math
from itertools import combinations
from typing import Iterator, List, Tuple

from .bitstring import BitString, Family
from .exceptions import DomainError
from .hypercube import InducedHypercube


def binom(a: int, b: int) -> int:
    """Binomial coefficient with ``C(a, b) = 0`` whenever ``b < 0`` or ``b > a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def _family(family) -> Family:
    family = Family.parse(family)
    if family is Family.HYPERCUBE:
        raise DomainError("maximal-cube enumeration is defined for fibonacci and lucas only")
    return family


def _gap_vectors(n: int, p: int, family: Family) -> Iterator[Tuple[int, ...]]:
    """Gap vectors ``(l0, ..., lp)`` summing to ``n - p`` under the family bounds."""
    total = n - p
    end_max = 1 if family is Family.FIBONACCI else 2
    inner = p - 1
    for l0 in range(end_max + 1):
        for lp in range(end_max + 1):
            if family is Family.LUCAS and not 1 <= l0 + lp <= 2:
                continue
            rest = total - l0 - lp
            # inner gaps are 1 or 2: choose which of them take the extra zero
            extra = rest - inner
            if not 0 <= extra <= inner:
                continue
            for picks in combinations(range(inner), extra):
                middle = [1] * inner
                for j in picks:
                    middle[j] = 2
                yield (l0, *middle, lp)


def _from_gaps(gaps: Tuple[int, ...]) -> BitString:
    return BitString.from_str("1".join("0" * g for g in gaps))


def enumerate_tops(n: int, p: int, family: "Family | str") -> List[BitString]:
    """Top vertices of the maximal ``p``-cubes, in ascending word order."""
    family = _family(family)
    if n < 0 or not 0 <= p <= n:
        raise DomainError(f"need 0 <= p <= n, got n={n}, p={p}")
    if p == 0:
        # only K1 (and, for Lucas, the single vertex of the length-1 cube) is a maximal point
        alone = n == 0 or (family is Family.LUCAS and n == 1)
        return [BitString.zeros(n)] if alone else []
    return sorted(_from_gaps(g) for g in _gap_vectors(n, p, family))


def enumerate_maximal(n: int, family: "Family | str") -> List[InducedHypercube]:
    """All maximal induced hypercubes, built from their top vertices."""
    family = _family(family)
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    zero = BitString.zeros(n)
    cubes = [
        InducedHypercube(n, zero, top.ones())
        for p in range(n + 1)
        for top in enumerate_tops(n, p, family)
    ]
    return sorted(cubes)


def count_f(n: int, p: int) -> int:
    """Number of maximal ``p``-cubes in the Fibonacci cube of order ``n``."""
    if n < 0 or not 0 <= p <= n:
        return 0
    return binom(p + 1, n - 2 * p + 1)


def count_g(n: int, p: int) -> int:
    """Number of maximal ``p``-cubes in the Lucas cube of order ``n``.

    Uses the integer form ``2 C(p, n-2p) + C(p-1, n-2p-1)``, equal to
    ``(n/p) C(p, n-2p)``.
    """
    if n < 0 or not 0 <= p <= n:
        return 0
    if p == 0:
        return 1 if n in (0, 1) else 0
    k = n - 2 * p
    return 2 * binom(p, k) + binom(p - 1, k - 1)


def count(n: int, p: int, family: "Family | str") -> int:
    return count_f(n, p) if _family(family) is Family.FIBONACCI else count_g(n, p)


def nonzero_range(n: int, family: "Family | str") -> Tuple[int, int]:
    """Inclusive range of dimensions ``p`` with a nonzero count."""
    family = _family(family)
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    if n == 0 or (family is Family.LUCAS and n == 1):
        return (0, 0)
    low = -(-n // 3)
    high = (n + 1) // 2 if family is Family.FIBONACCI else n // 2
    return (low, high)
