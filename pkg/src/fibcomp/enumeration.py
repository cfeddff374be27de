"""Lazy enumeration, exact counting, ranking, and part-count statistics.

Canonical order is ascending lexicographic on part sequences.  Counting is
dynamic programming over the first part in exact ints, so the Fibonacci and
power-of-two closed forms stay independent checks.
"""

from __future__ import annotations

import threading
from collections.abc import Iterator
from dataclasses import dataclass, field

from .core import Cls, Composition, DomainError, check_composition


@dataclass(frozen=True)
class CountTable:
    """counts[m] = number of class-compositions of m for 0 <= m <= limit."""

    cls: Cls
    limit: int
    counts: tuple[int, ...] = field(repr=False)


_tables: dict[Cls, list[int]] = {}
_tables_lock = threading.Lock()


def _counts(spec: Cls, n: int) -> list[int]:
    """Shared per-class count list, grown on demand."""
    with _tables_lock:
        counts = _tables.setdefault(spec, [1])
        for m in range(len(counts), n + 1):
            total = 0
            p = spec.first_part()
            while p is not None and p <= m:
                total += counts[m - p]
                p = spec.next_part(p)
            counts.append(total)
        return counts


def count_table(spec: Cls, n: int) -> CountTable:
    if n < 0:
        raise DomainError("n must be nonnegative")
    return CountTable(spec, n, tuple(_counts(spec, n)[: n + 1]))


def count(spec: Cls, n: int) -> int:
    """Number of class-compositions of n, exact."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    return _counts(spec, n)[n]


def _extend_smallest(spec: Cls, parts: list[int], m: int) -> None:
    """Append the lexicographically smallest class-completion of m."""
    while m > 0:
        p = spec.first_part()
        while p > m or not spec.feasible(m - p):
            p = spec.next_part(p)
        parts.append(p)
        m -= p


def lex_first(spec: Cls, n: int) -> Composition | None:
    """First composition in canonical order, or None for an empty class."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    if not spec.feasible(n):
        return None
    parts: list[int] = []
    _extend_smallest(spec, parts, n)
    return tuple(parts)


def successor(spec: Cls, c: Composition, n: int) -> Composition | None:
    """Next class-composition of n after c in canonical order, or None.

    Together with lex_first this is the explicit enumeration cursor: a
    stream can be paused and resumed from any composition.
    """
    rem = 0
    for i in range(len(c) - 1, -1, -1):
        rem += c[i]
        v = spec.next_part(c[i])
        while v is not None and v <= rem and not spec.feasible(rem - v):
            v = spec.next_part(v)
        if v is not None and v <= rem:
            parts = list(c[:i])
            parts.append(v)
            _extend_smallest(spec, parts, rem - v)
            return tuple(parts)
    return None


def enumerate_compositions(spec: Cls, n: int) -> Iterator[Composition]:
    """Yield every class-composition of n once, in canonical order.

    Lazy; holds only the current part list, so memory is O(n).
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    if n == 0:
        yield ()
        return
    if not spec.feasible(n):
        return
    parts: list[int] = []
    _extend_smallest(spec, parts, n)
    if spec is Cls.ALL:
        # Dominant class (2^(n-1) items); its lex successor is trivial: drop
        # the last part onto the one before it and pad with 1s.
        one = (1,)
        while True:
            yield tuple(parts)
            if len(parts) == 1:
                return
            last = parts.pop()
            parts[-1] += 1
            if last > 1:
                parts.extend(one * (last - 1))
    next_part = spec.next_part
    feasible = spec.feasible
    admits_one = spec.admits(1)  # lex-smallest completion is then all 1s
    while True:
        yield tuple(parts)
        rem = 0
        for i in range(len(parts) - 1, -1, -1):
            rem += parts[i]
            v = next_part(parts[i])
            while v is not None and v <= rem and not feasible(rem - v):
                v = next_part(v)
            if v is not None and v <= rem:
                del parts[i:]
                parts.append(v)
                if admits_one:
                    parts.extend([1] * (rem - v))
                else:
                    _extend_smallest(spec, parts, rem - v)
                break
        else:
            return


def rank(spec: Cls, c: Composition) -> int:
    """0-based index of c in the canonical order of its class and total."""
    check_composition(c)
    if not spec.contains(c):
        raise DomainError(f"{c!r} is not in class {spec.value}")
    n = sum(c)
    counts = _counts(spec, n)
    r = 0
    m = n
    for p in c:
        v = spec.first_part()
        while v < p:
            r += counts[m - v]
            v = spec.next_part(v)
        m -= p
    return r


def unrank(spec: Cls, n: int, r: int) -> Composition:
    """Composition at index r; inverse of rank."""
    total = count(spec, n)
    if r < 0 or r >= total:
        raise DomainError(f"rank {r} out of range [0, {total}) for {spec.value}({n})")
    counts = _counts(spec, n)
    parts: list[int] = []
    m = n
    while m > 0:
        v = spec.first_part()
        while True:
            cnt = counts[m - v] if v <= m else 0
            if r < cnt:
                parts.append(v)
                m -= v
                break
            r -= cnt
            v = spec.next_part(v)
            if v is None:
                raise AssertionError("unrank ran out of part values")
    return tuple(parts)


def enumerate_range(spec: Cls, n: int, lo: int, hi: int) -> Iterator[Composition]:
    """Ranks [lo, hi) of the canonical order; the sharding primitive."""
    total = count(spec, n)
    hi = min(hi, total)
    if lo < 0 or lo > hi:
        raise DomainError(f"bad rank range [{lo}, {hi})")
    if lo == hi:
        return
    c: Composition | None = unrank(spec, n, lo)
    for _ in range(hi - lo):
        assert c is not None
        yield c
        c = successor(spec, c, n)


def count_by_parts(spec: Cls, n: int) -> dict[int, int]:
    """Map part-count j to the number of class-compositions of n with j parts.

    Only nonzero entries appear; n = 0 gives {0: 1} for the empty
    composition.  Values sum to count(spec, n).
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    if n == 0:
        return {0: 1}
    result: dict[int, int] = {}
    prev = [1] + [0] * n  # j = 0 row
    for j in range(1, n + 1):
        cur = [0] * (n + 1)
        for m in range(1, n + 1):
            total = 0
            p = spec.first_part()
            while p is not None and p <= m:
                total += prev[m - p]
                p = spec.next_part(p)
            cur[m] = total
        if cur[n]:
            result[j] = cur[n]
        if not any(cur):
            break
        prev = cur
    return result


_pascal: list[list[int]] = [[1]]
_pascal_lock = threading.Lock()


def binomial(a: int, b: int) -> int:
    """Binomial coefficient by Pascal-triangle DP; 0 outside 0 <= b <= a."""
    if a < 0 or b < 0 or b > a:
        return 0
    if a >= len(_pascal):
        with _pascal_lock:
            while len(_pascal) <= a:
                row = _pascal[-1]
                _pascal.append(
                    [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
                )
    return _pascal[a][b]
