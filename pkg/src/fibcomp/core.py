"""Composition data model, restriction classes, and exact Fibonacci numbers.

A composition is represented as a plain tuple of positive ints; the empty
tuple is the unique composition of 0.
"""

from __future__ import annotations

import threading
from enum import Enum

Composition = tuple[int, ...]

EMPTY_TOKEN = "-"


class ParseError(ValueError):
    """Malformed textual input."""


class DomainError(ValueError):
    """Input outside an operation's domain."""


class Cls(Enum):
    """A restriction class on part values.

    ALL admits every part >= 1, PARTS12 admits parts in {1, 2}, ODD admits
    odd parts, MIN2 admits parts >= 2.  A composition belongs to a class
    iff every part is admitted; the empty composition belongs to all four.
    """

    ALL = "all"
    PARTS12 = "parts12"
    ODD = "odd"
    MIN2 = "min2"

    def admits(self, part: int) -> bool:
        if self is Cls.ALL:
            return part >= 1
        if self is Cls.PARTS12:
            return part in (1, 2)
        if self is Cls.ODD:
            return part >= 1 and part % 2 == 1
        return part >= 2

    def contains(self, c: Composition) -> bool:
        return all(self.admits(p) for p in c)

    def first_part(self) -> int:
        """Smallest admitted part value."""
        return 2 if self is Cls.MIN2 else 1

    def next_part(self, k: int) -> int | None:
        """Smallest admitted value strictly greater than k, or None."""
        if self is Cls.PARTS12:
            return 2 if k < 2 else None
        if self is Cls.ODD:
            return k + 2 if k >= 1 else 1
        return max(k + 1, self.first_part())

    def feasible(self, m: int) -> bool:
        """Whether the class contains any composition of m."""
        if m < 0:
            return False
        return m != 1 if self is Cls.MIN2 else True


def check_composition(c: Composition) -> None:
    """Raise DomainError unless every part is a positive integer."""
    for p in c:
        if not isinstance(p, int) or p < 1:
            raise DomainError(f"invalid part {p!r} in composition {c!r}")


def classify(c: Composition) -> set[Cls]:
    """The set of classes whose predicate every part of c satisfies."""
    check_composition(c)
    return {spec for spec in Cls if spec.contains(c)}


_fib_cache = [0, 1]
_fib_lock = threading.Lock()


def fib(m: int) -> int:
    """Fibonacci number F_m as an exact int (F_0 = 0, F_1 = 1)."""
    if m < 0:
        raise DomainError("fib index must be nonnegative")
    if m >= len(_fib_cache):
        # Growth is guarded so concurrent readers see a consistent prefix.
        with _fib_lock:
            while len(_fib_cache) <= m:
                _fib_cache.append(_fib_cache[-1] + _fib_cache[-2])
    return _fib_cache[m]


def parse_composition(text: str) -> Composition:
    """Parse the wire form: comma-separated parts, `-` for the empty one."""
    text = text.strip()
    if text == EMPTY_TOKEN:
        return ()
    if not text:
        raise ParseError("empty composition text (use '-' for the empty composition)")
    parts = []
    for tok in text.split(","):
        if not tok.isdigit():
            raise ParseError(f"bad part {tok!r} in {text!r}")
        p = int(tok)
        if p < 1:
            raise ParseError(f"part must be positive, got {p}")
        parts.append(p)
    return tuple(parts)


def format_composition(c: Composition) -> str:
    """Inverse of parse_composition."""
    return EMPTY_TOKEN if not c else ",".join(str(p) for p in c)
