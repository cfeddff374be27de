"""Exact verification of five counting identities.

Each check compares a summation against a Fibonacci (or power-of-two)
closed form in exact ints, and cross-checks against class counts or the
part-count statistic wherever the enumeration machinery is in range.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Cls, DomainError, fib
from .enumeration import binomial, count, count_by_parts, enumerate_compositions

IDENTITY_IDS = ("eq1", "eq2", "eq3", "eq4", "pow2")

DEFAULT_N_MAX = 30
DEFAULT_ENUM_LIMIT = 22
DEFAULT_PARTS_LIMIT = 24
DEFAULT_POW2_ENUM_LIMIT = 16


@dataclass
class IdentityReport:
    identity: str
    rows: list[tuple[int, int, int]] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and all(lhs == rhs for _, lhs, rhs in self.rows)

    def add(self, n: int, lhs: int, rhs: int) -> None:
        self.rows.append((n, lhs, rhs))
        if lhs != rhs:
            self.failures.append(f"n={n}: {lhs} != {rhs}")


def check_eq1(n_max: int = DEFAULT_N_MAX,
              enum_limit: int = DEFAULT_ENUM_LIMIT) -> IdentityReport:
    """Sum of odd-indexed Fibonacci numbers F_1 + F_3 + ... + F_{2n-1} = F_{2n}."""
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    report = IdentityReport("eq1")
    lhs = 0
    for n in range(1, n_max + 1):
        lhs += fib(2 * n - 1)
        rhs = fib(2 * n)
        report.add(n, lhs, rhs)
        # F_{2n} also counts the all-odd compositions of 2n.
        if 2 * n <= enum_limit and count(Cls.ODD, 2 * n) != rhs:
            report.failures.append(
                f"n={n}: count(odd, {2 * n}) = {count(Cls.ODD, 2 * n)} != F_{2 * n}"
            )
    return report


def check_eq2(n_max: int = DEFAULT_N_MAX,
              enum_limit: int = DEFAULT_ENUM_LIMIT) -> IdentityReport:
    """Sum of even-indexed Fibonacci numbers F_2 + ... + F_{2n} = F_{2n+1} - 1."""
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    report = IdentityReport("eq2")
    lhs = 0
    for n in range(1, n_max + 1):
        lhs += fib(2 * n)
        rhs = fib(2 * n + 1) - 1
        report.add(n, lhs, rhs)
        if 2 * n + 1 <= enum_limit and count(Cls.ODD, 2 * n + 1) - 1 != rhs:
            report.failures.append(
                f"n={n}: count(odd, {2 * n + 1}) - 1 != F_{2 * n + 1} - 1"
            )
    return report


def check_eq3(n_max: int = DEFAULT_N_MAX,
              enum_limit: int = DEFAULT_ENUM_LIMIT) -> IdentityReport:
    """Doubled form of F_1 + F_4 + ... + F_{3n-2} = F_{3n} / 2; no division."""
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    report = IdentityReport("eq3")
    acc = 0
    for n in range(1, n_max + 1):
        acc += fib(3 * n - 2)
        rhs = fib(3 * n)
        report.add(n, 2 * acc, rhs)
        # F_{3n} also counts the all-parts->=2 compositions of 3n + 1.
        if 3 * n + 1 <= enum_limit and count(Cls.MIN2, 3 * n + 1) != rhs:
            report.failures.append(
                f"n={n}: count(min2, {3 * n + 1}) != F_{3 * n}"
            )
    return report


def check_eq4(n_max: int = DEFAULT_N_MAX,
              parts_limit: int = DEFAULT_PARTS_LIMIT) -> IdentityReport:
    """Shallow Pascal diagonal: sum_k C(n-1-k, k) = F_n.

    For n <= parts_limit each term is also matched against the number of
    compositions of n+1 with all parts >= 2 and exactly k+1 parts, the
    combinatorial reading of the identity.
    """
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    report = IdentityReport("eq4")
    for n in range(1, n_max + 1):
        terms = []
        k = 0
        while n - 1 - k >= k:
            terms.append(binomial(n - 1 - k, k))
            k += 1
        report.add(n, sum(terms), fib(n))
        if n <= parts_limit:
            by_parts = count_by_parts(Cls.MIN2, n + 1)
            for k, term in enumerate(terms):
                got = by_parts.get(k + 1, 0)
                if got != term:
                    report.failures.append(
                        f"n={n}: {got} compositions of {n + 1} with parts >= 2 "
                        f"and {k + 1} parts, expected C({n - 1 - k},{k}) = {term}"
                    )
            if sum(by_parts.values()) != count(Cls.MIN2, n + 1):
                report.failures.append(f"n={n}: part-count table does not total")
            if count(Cls.MIN2, n + 1) != fib(n):
                report.failures.append(f"n={n}: count(min2, {n + 1}) != F_{n}")
    return report


def check_pow2(n_max: int = DEFAULT_N_MAX,
               enum_limit: int = DEFAULT_POW2_ENUM_LIMIT) -> IdentityReport:
    """Number of unrestricted compositions of n is 2^(n-1)."""
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    report = IdentityReport("pow2")
    for n in range(1, n_max + 1):
        report.add(n, count(Cls.ALL, n), 2 ** (n - 1))
        if n <= enum_limit:
            seen = sum(1 for _ in enumerate_compositions(Cls.ALL, n))
            if seen != 2 ** (n - 1):
                report.failures.append(f"n={n}: enumerated {seen} compositions")
    return report


CHECKS = {
    "eq1": check_eq1,
    "eq2": check_eq2,
    "eq3": check_eq3,
    "eq4": check_eq4,
    "pow2": check_pow2,
}
