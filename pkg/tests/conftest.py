"""Shared test helpers: an enumeration oracle independent of the package.

Compositions of n are generated straight from the 2^(n-1) boundary
bitmasks (bit i set = a part ends after cell i+1), then filtered by plain
part predicates.  Nothing here touches fibcomp's enumeration machinery.
"""

from fibcomp import Cls

CLASS_PREDICATES = {
    Cls.ALL: lambda c: True,
    Cls.PARTS12: lambda c: all(p in (1, 2) for p in c),
    Cls.ODD: lambda c: all(p % 2 == 1 for p in c),
    Cls.MIN2: lambda c: all(p >= 2 for p in c),
}


def brute_compositions(n):
    """All compositions of n, from boundary bitmasks."""
    if n == 0:
        return [()]
    out = []
    for mask in range(1 << (n - 1)):
        parts = []
        run = 1
        for i in range(n - 1):
            if mask >> i & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(tuple(parts))
    return out


def brute_class(cls, n):
    """Class-compositions of n in ascending lex order, via the oracle."""
    pred = CLASS_PREDICATES[cls]
    return sorted(c for c in brute_compositions(n) if pred(c))


def brute_class_recursive(cls, n):
    """Same result by naive recursion over the first part; scales further
    than the bitmask scan for sparse classes."""
    pred = CLASS_PREDICATES[cls]
    out = []

    def rec(m, acc):
        if m == 0:
            out.append(tuple(acc))
            return
        for p in range(1, m + 1):
            if pred((p,)):
                acc.append(p)
                rec(m - p, acc)
                acc.pop()

    rec(n, [])
    return out
