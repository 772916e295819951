"""Binary strings, family predicates, generation and block decompositions.

A string ``b1 b2 ... bn`` is stored as an integer word with ``b1`` in the
least significant bit, so the "no two adjacent ones" test is a single
shift-and-mask.  The printed form keeps ``b1`` leftmost.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import List, Tuple

from .exceptions import DomainError

EMPTY_TOKEN = "(empty)"


class Family(enum.Enum):
    FIBONACCI = "fibonacci"
    LUCAS = "lucas"
    HYPERCUBE = "hypercube"

    @classmethod
    def parse(cls, value: "str | Family") -> "Family":
        """Accept an enum member, a canonical name or one of the symbol aliases."""
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        try:
            return _FAMILY_ALIASES[key]
        except KeyError:
            raise DomainError(
                f"unknown family {value!r}; expected one of {sorted(_FAMILY_ALIASES)}"
            ) from None

    @property
    def symbol(self) -> str:
        return {"fibonacci": "gamma", "lucas": "lambda", "hypercube": "q"}[self.value]


_FAMILY_ALIASES = {
    "fibonacci": Family.FIBONACCI,
    "gamma": Family.FIBONACCI,
    "lucas": Family.LUCAS,
    "lambda": Family.LUCAS,
    "hypercube": Family.HYPERCUBE,
    "q": Family.HYPERCUBE,
}


@dataclass(frozen=True, order=True)
class BitString:
    """Fixed-length binary word.

    Ordering is by ``(n, word)``: strings of equal length sort by the integer
    value of the word, which is the canonical enumeration order used
    throughout the package.
    """

    n: int
    word: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"length must be non-negative, got {self.n}")
        if self.word < 0 or self.word >> self.n:
            raise DomainError(f"word {self.word} does not fit in {self.n} bits")

    @classmethod
    def from_str(cls, text: str) -> "BitString":
        if text == EMPTY_TOKEN:
            text = ""
        word = 0
        for i, ch in enumerate(text):
            if ch == "1":
                word |= 1 << i
            elif ch != "0":
                raise DomainError(f"invalid character {ch!r} in bit string {text!r}")
        return cls(len(text), word)

    @classmethod
    def zeros(cls, n: int) -> "BitString":
        return cls(n, 0)

    def __str__(self) -> str:
        return "".join("1" if self.word >> i & 1 else "0" for i in range(self.n))

    def __len__(self) -> int:
        return self.n

    def bit(self, i: int) -> int:
        """Bit ``b_i`` with 1-based ``i``."""
        if not 1 <= i <= self.n:
            raise IndexError(f"bit index {i} out of range 1..{self.n}")
        return self.word >> (i - 1) & 1

    @property
    def weight(self) -> int:
        return bin(self.word).count("1")

    def ones(self) -> Tuple[int, ...]:
        """1-based positions holding a 1."""
        return tuple(i + 1 for i in range(self.n) if self.word >> i & 1)

    def flip(self, i: int) -> "BitString":
        """The string ``x + e_i``."""
        if not 1 <= i <= self.n:
            raise IndexError(f"bit index {i} out of range 1..{self.n}")
        return BitString(self.n, self.word ^ (1 << (i - 1)))

    def csv_token(self) -> str:
        return str(self) if self.n else EMPTY_TOKEN


def hamming(u: BitString, v: BitString) -> int:
    if u.n != v.n:
        raise DomainError(f"length mismatch: {u.n} vs {v.n}")
    return bin(u.word ^ v.word).count("1")


def _as_bitstring(s: "BitString | str") -> BitString:
    return s if isinstance(s, BitString) else BitString.from_str(s)


def is_fibonacci(s: "BitString | str") -> bool:
    s = _as_bitstring(s)
    return s.word & (s.word >> 1) == 0


def is_lucas(s: "BitString | str") -> bool:
    s = _as_bitstring(s)
    if not is_fibonacci(s):
        return False
    if s.n == 0:
        return True
    return not (s.word & 1 and s.word >> (s.n - 1) & 1)


def belongs(s: "BitString | str", family: "Family | str") -> bool:
    family = Family.parse(family)
    if family is Family.FIBONACCI:
        return is_fibonacci(s)
    if family is Family.LUCAS:
        return is_lucas(s)
    return True


def _violation(s: BitString, family: Family) -> str:
    """Human-readable reason ``s`` is outside ``family`` (empty if it is inside)."""
    clash = s.word & (s.word >> 1)
    if clash:
        i = (clash & -clash).bit_length()
        return f"adjacent 1s at positions {i},{i + 1} of {s}"
    if family is Family.LUCAS and not is_lucas(s):
        return f"b1 = b{s.n} = 1 in {s}"
    return ""


def _fibonacci_words(n: int) -> List[int]:
    # words of length n with no two adjacent ones, built from the high end
    if n == 0:
        return [0]
    words, prev = [0, 1], [0]
    for length in range(2, n + 1):
        top = 1 << (length - 1)
        words, prev = words + [w | top for w in prev], words
    return words


def generate(n: int, family: "Family | str") -> List[BitString]:
    """All strings of ``family`` at length ``n``, in ascending word order."""
    family = Family.parse(family)
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    if family is Family.HYPERCUBE:
        words = range(1 << n)
    else:
        words = sorted(_fibonacci_words(n))
        if family is Family.LUCAS and n >= 2:
            ends = 1 | 1 << (n - 1)
            words = [w for w in words if w & ends != ends]
        elif family is Family.LUCAS and n == 1:
            words = [0]
    return [BitString(n, w) for w in words]


def count_by_weight(n: int, w: int, family: "Family | str") -> int:
    """Number of strings of weight ``w`` in the family at length ``n``.

    The Fibonacci count is the closed form ``C(n-w+1, w)``.  Lucas counts are
    obtained by filtering the full enumeration.
    """
    family = Family.parse(family)
    if n < 0 or not 0 <= w <= n:
        raise DomainError(f"need 0 <= w <= n, got n={n}, w={w}")
    if family is Family.FIBONACCI:
        return math.comb(n - w + 1, w)
    if family is Family.HYPERCUBE:
        return math.comb(n, w)
    return sum(1 for s in generate(n, family) if s.weight == w)


@dataclass(frozen=True)
class ZeroBlockDecomposition:
    """``0^{l0} 1 0^{l1} 1 ... 1 0^{lp}`` with ``p`` the weight."""

    p: int
    l: Tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(self.l) + self.p

    def to_bitstring(self) -> BitString:
        return BitString.from_str("1".join("0" * run for run in self.l))


@dataclass(frozen=True)
class OneBlockDecomposition:
    """``1^{k0} 0 1^{k1} 0 ... 0 1^{kq}`` with ``q = n - weight``."""

    q: int
    k: Tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(self.k) + self.q

    def to_bitstring(self) -> BitString:
        return BitString.from_str("0".join("1" * run for run in self.k))


def _check_member(s: BitString, family: Family) -> None:
    if family is Family.HYPERCUBE:
        raise DomainError("block decompositions are defined for fibonacci and lucas only")
    reason = _violation(s, family)
    if reason:
        raise DomainError(f"not a {family.value} string: {reason}")


def decompose_zero_blocks(
    s: "BitString | str", family: "Family | str" = Family.FIBONACCI
) -> ZeroBlockDecomposition:
    s, family = _as_bitstring(s), Family.parse(family)
    _check_member(s, family)
    runs = tuple(len(r) for r in str(s).split("1"))
    return ZeroBlockDecomposition(p=len(runs) - 1, l=runs)


def decompose_one_blocks(
    s: "BitString | str", family: "Family | str" = Family.FIBONACCI
) -> OneBlockDecomposition:
    s, family = _as_bitstring(s), Family.parse(family)
    _check_member(s, family)
    runs = tuple(len(r) for r in str(s).split("0"))
    return OneBlockDecomposition(q=len(runs) - 1, k=runs)
