"""Induced subcubes in canonical (bottom, support) form and the brute-force oracle.

The oracle grows cubes one coordinate at a time from every vertex and keeps
the ones that cannot grow further.  It knows nothing about top-vertex
patterns, which makes it an independent check on :mod:`fibcube.maximal`.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

from .bitstring import BitString, Family, belongs, generate
from .exceptions import DomainError, ResourceError

DEFAULT_ORACLE_CAP = 12
ORACLE_CAP_ENV = "FIBCUBE_ORACLE_CAP"


def oracle_cap() -> int:
    raw = os.environ.get(ORACLE_CAP_ENV)
    if raw is None or raw == "":
        return DEFAULT_ORACLE_CAP
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"{ORACLE_CAP_ENV} must be an integer, got {raw!r}") from None


@dataclass(frozen=True, order=True)
class InducedHypercube:
    """A subcube of Q_n given by its bottom vertex and 1-based support.

    Sorting is by ``(n, bottom, support)``, the canonical order for cube lists.
    """

    n: int
    bottom: BitString
    support: Tuple[int, ...] = ()

    def __post_init__(self):
        if isinstance(self.bottom, str):
            object.__setattr__(self, "bottom", BitString.from_str(self.bottom))
        support = tuple(sorted(set(self.support)))
        object.__setattr__(self, "support", support)
        if self.bottom.n != self.n:
            raise DomainError(f"bottom {self.bottom} has length {self.bottom.n}, expected {self.n}")
        if support and not (1 <= support[0] and support[-1] <= self.n):
            raise DomainError(f"support {support} outside 1..{self.n}")
        if self.bottom.word & self.support_mask:
            raise DomainError(f"bottom {self.bottom} has a 1 on the support {support}")

    @property
    def support_mask(self) -> int:
        mask = 0
        for i in self.support:
            mask |= 1 << (i - 1)
        return mask

    @property
    def dimension(self) -> int:
        return len(self.support)

    @property
    def top(self) -> BitString:
        return BitString(self.n, self.bottom.word | self.support_mask)

    def to_json(self) -> Dict[str, Any]:
        return {"bottom": str(self.bottom), "support": list(self.support), "top": str(self.top)}

    @classmethod
    def from_json(cls, obj: Dict[str, Any]) -> "InducedHypercube":
        bottom = BitString.from_str(obj["bottom"])
        cube = cls(bottom.n, bottom, tuple(obj["support"]))
        if "top" in obj and str(cube.top) != obj["top"]:
            raise DomainError(f"top {obj['top']!r} inconsistent with bottom and support")
        return cube


def vertex_set(h: InducedHypercube) -> List[BitString]:
    """All ``2**dimension`` strings agreeing with the bottom off the support."""
    positions = [i - 1 for i in h.support]
    out = []
    for subset in range(1 << len(positions)):
        word = h.bottom.word
        for j, pos in enumerate(positions):
            if subset >> j & 1:
                word |= 1 << pos
        out.append(BitString(h.n, word))
    return sorted(out)


def is_induced_in(h: InducedHypercube, family: "Family | str") -> bool:
    family = Family.parse(family)
    return all(belongs(v, family) for v in vertex_set(h))


def extensions(h: InducedHypercube, family: "Family | str") -> List[InducedHypercube]:
    """Cubes ``H + e_i`` for ``i`` off the support that stay inside the family.

    When ``bottom_i = 1`` the doubled cube has bit ``i`` cleared in its bottom.
    """
    family = Family.parse(family)
    out = []
    for i in range(1, h.n + 1):
        if i in h.support:
            continue
        bottom = BitString(h.n, h.bottom.word & ~(1 << (i - 1)))
        candidate = InducedHypercube(h.n, bottom, h.support + (i,))
        if is_induced_in(candidate, family):
            out.append(candidate)
    return out


def oracle_maximal(n: int, family: "Family | str", cap: "int | None" = None) -> List[InducedHypercube]:
    """Every maximal induced hypercube, found by exhaustive growth.

    Starts a depth-first search at each vertex viewed as a 0-cube; every cube
    reached is visited once, and it is reported when it has no extension.
    """
    family = Family.parse(family)
    cap = oracle_cap() if cap is None else cap
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    if n > cap:
        raise ResourceError(f"oracle capped at n <= {cap}, got {n}")
    seen = set()
    maximal = []
    stack = [InducedHypercube(n, v) for v in generate(n, family)]
    while stack:
        h = stack.pop()
        key = (h.bottom.word, h.support)
        if key in seen:
            continue
        seen.add(key)
        grown = extensions(h, family)
        if not grown:
            maximal.append(h)
        stack.extend(c for c in grown if (c.bottom.word, c.support) not in seen)
    return sorted(maximal)
