"""The four explicit bijections onto Fibonacci-counted composition classes.

Three recurrence bijections realize C(n) ~ C(n-1) u C(n-2) within one class
(parts in {1,2}; all parts odd; all parts >= 2), and the fourth maps the
disjoint union of the >= 2 class and the odd class onto the {1,2} class.
Each has an exact inverse, and verify_bijection checks every claim
exhaustively at a given n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .codec import conjugate
from .core import Cls, Composition, DomainError, format_composition
from .enumeration import enumerate_compositions

DEFAULT_MATERIALIZE_BOUND = 20


class InternalInvariantError(RuntimeError):
    """A structural claim the construction relies on failed; a defect."""


class Origin(Enum):
    FROM_N_MINUS_1 = "from-n-minus-1"
    FROM_N_MINUS_2 = "from-n-minus-2"
    FROM_MIN2 = "from-min2"
    FROM_ODD = "from-odd"


@dataclass(frozen=True)
class TaggedSource:
    """A composition tagged with which side of a disjoint union it came from.

    The tag is semantic: the same composition can lie in both source classes
    of the union map, so the origin is not recoverable from the payload.
    """

    origin: Origin
    payload: Composition


def _require_member(c: Composition, spec: Cls, n: int, what: str) -> None:
    if sum(c) != n or not spec.contains(c):
        raise DomainError(
            f"{what}: {format_composition(c)} is not a {spec.value}-composition of {n}"
        )


def _require_origin(src: TaggedSource, allowed: tuple[Origin, Origin]) -> None:
    if src.origin not in allowed:
        raise DomainError(f"origin {src.origin.value} not valid for this map")


# -- parts in {1,2}: append a domino or a square ---------------------------

def prop1_forward(src: TaggedSource, n: int) -> Composition:
    if n < 3:
        raise DomainError("map requires n >= 3")
    _require_origin(src, (Origin.FROM_N_MINUS_1, Origin.FROM_N_MINUS_2))
    if src.origin is Origin.FROM_N_MINUS_2:
        _require_member(src.payload, Cls.PARTS12, n - 2, "prop1 forward")
        return src.payload + (2,)
    _require_member(src.payload, Cls.PARTS12, n - 1, "prop1 forward")
    return src.payload + (1,)


def prop1_backward(c: Composition, n: int) -> TaggedSource:
    if n < 3:
        raise DomainError("map requires n >= 3")
    _require_member(c, Cls.PARTS12, n, "prop1 backward")
    if c[-1] == 2:
        return TaggedSource(Origin.FROM_N_MINUS_2, c[:-1])
    return TaggedSource(Origin.FROM_N_MINUS_1, c[:-1])


# -- all parts odd: grow the last part by 2, or append a 1 -----------------

def prop2_forward(src: TaggedSource, n: int) -> Composition:
    if n < 3:
        raise DomainError("map requires n >= 3")
    _require_origin(src, (Origin.FROM_N_MINUS_1, Origin.FROM_N_MINUS_2))
    if src.origin is Origin.FROM_N_MINUS_2:
        _require_member(src.payload, Cls.ODD, n - 2, "prop2 forward")
        return src.payload[:-1] + (src.payload[-1] + 2,)
    _require_member(src.payload, Cls.ODD, n - 1, "prop2 forward")
    return src.payload + (1,)


def prop2_backward(c: Composition, n: int) -> TaggedSource:
    if n < 3:
        raise DomainError("map requires n >= 3")
    _require_member(c, Cls.ODD, n, "prop2 backward")
    if c[-1] == 1:
        return TaggedSource(Origin.FROM_N_MINUS_1, c[:-1])
    return TaggedSource(Origin.FROM_N_MINUS_2, c[:-1] + (c[-1] - 2,))


# -- all parts >= 2: append a domino, or grow the last part by 1 -----------

def prop3_forward(src: TaggedSource, n: int) -> Composition:
    if n < 4:
        raise DomainError("map requires n >= 4")
    _require_origin(src, (Origin.FROM_N_MINUS_1, Origin.FROM_N_MINUS_2))
    if src.origin is Origin.FROM_N_MINUS_2:
        _require_member(src.payload, Cls.MIN2, n - 2, "prop3 forward")
        return src.payload + (2,)
    _require_member(src.payload, Cls.MIN2, n - 1, "prop3 forward")
    return src.payload[:-1] + (src.payload[-1] + 1,)


def prop3_backward(c: Composition, n: int) -> TaggedSource:
    if n < 4:
        raise DomainError("map requires n >= 4")
    _require_member(c, Cls.MIN2, n, "prop3 backward")
    if c[-1] == 2:
        return TaggedSource(Origin.FROM_N_MINUS_2, c[:-1])
    return TaggedSource(Origin.FROM_N_MINUS_1, c[:-1] + (c[-1] - 1,))


# -- union map: (>= 2 class) u (odd class) -> {1,2} class ------------------

def _min2_to_parts12(c: Composition, n: int) -> Composition:
    conj = conjugate(c)
    # The conjugate of an all-parts->=2 composition must have parts <= 2
    # with 1s at both ends; anything else is a defect, not bad input.
    if any(p > 2 for p in conj) or conj[0] != 1 or conj[-1] != 1:
        raise InternalInvariantError(
            f"conjugate of {format_composition(c)} has unexpected shape "
            f"{format_composition(conj)}"
        )
    return conj[1:-1] + (2,)


def _odd_to_parts12(c: Composition) -> Composition:
    out: list[int] = []
    for p in c:
        out.extend([2] * (p // 2))
        out.append(1)
    return tuple(out)


def thm4_forward(src: TaggedSource, n: int) -> Composition:
    if n < 2:
        raise DomainError("map requires n >= 2")
    _require_origin(src, (Origin.FROM_MIN2, Origin.FROM_ODD))
    if src.origin is Origin.FROM_MIN2:
        _require_member(src.payload, Cls.MIN2, n, "thm4 forward")
        return _min2_to_parts12(src.payload, n)
    _require_member(src.payload, Cls.ODD, n, "thm4 forward")
    return _odd_to_parts12(src.payload)


def thm4_backward(c: Composition, n: int) -> TaggedSource:
    if n < 2:
        raise DomainError("map requires n >= 2")
    _require_member(c, Cls.PARTS12, n, "thm4 backward")
    if c[-1] == 2:
        padded = (1,) + c[:-1] + (1,)
        return TaggedSource(Origin.FROM_MIN2, conjugate(padded))
    # Last part 1: every run of k 2s is followed by a 1; fold to 2k+1.
    parts: list[int] = []
    twos = 0
    for p in c:
        if p == 2:
            twos += 1
        else:
            parts.append(2 * twos + 1)
            twos = 0
    return TaggedSource(Origin.FROM_ODD, tuple(parts))


@dataclass(frozen=True)
class BijectionSpec:
    """A forward/backward pair with its domain and target classes."""

    name: str
    min_n: int
    target: Cls
    # (origin tag, source class, total offset n - off)
    sources: tuple[tuple[Origin, Cls, int], ...]
    forward: object
    backward: object

    def source_totals(self, n: int) -> list[tuple[Origin, Cls, int]]:
        return [(o, cls, n - off) for o, cls, off in self.sources]


def _discriminate(name: str, last_part: int) -> Origin:
    """Origin implied by the image's last part, per map."""
    if name == "prop1":
        return Origin.FROM_N_MINUS_2 if last_part == 2 else Origin.FROM_N_MINUS_1
    if name == "prop2":
        return Origin.FROM_N_MINUS_1 if last_part == 1 else Origin.FROM_N_MINUS_2
    if name == "prop3":
        return Origin.FROM_N_MINUS_2 if last_part == 2 else Origin.FROM_N_MINUS_1
    return Origin.FROM_MIN2 if last_part == 2 else Origin.FROM_ODD


BIJECTIONS: dict[str, BijectionSpec] = {
    "prop1": BijectionSpec(
        "prop1", 3, Cls.PARTS12,
        ((Origin.FROM_N_MINUS_1, Cls.PARTS12, 1),
         (Origin.FROM_N_MINUS_2, Cls.PARTS12, 2)),
        prop1_forward, prop1_backward,
    ),
    "prop2": BijectionSpec(
        "prop2", 3, Cls.ODD,
        ((Origin.FROM_N_MINUS_1, Cls.ODD, 1),
         (Origin.FROM_N_MINUS_2, Cls.ODD, 2)),
        prop2_forward, prop2_backward,
    ),
    "prop3": BijectionSpec(
        "prop3", 4, Cls.MIN2,
        ((Origin.FROM_N_MINUS_1, Cls.MIN2, 1),
         (Origin.FROM_N_MINUS_2, Cls.MIN2, 2)),
        prop3_forward, prop3_backward,
    ),
    "thm4": BijectionSpec(
        "thm4", 2, Cls.PARTS12,
        ((Origin.FROM_MIN2, Cls.MIN2, 0),
         (Origin.FROM_ODD, Cls.ODD, 0)),
        thm4_forward, thm4_backward,
    ),
}


@dataclass
class BijectionReport:
    """Outcome of an exhaustive check at one n; failures carry witnesses."""

    name: str
    n: int
    target_size: int = 0
    source_sizes: dict[str, int] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        parts = " + ".join(str(v) for v in self.source_sizes.values())
        status = "pass" if self.passed else "FAIL"
        return f"{self.name} n={self.n} {status} {self.target_size} = {parts}"


def verify_bijection(
    name: str, n: int, bound: int = DEFAULT_MATERIALIZE_BOUND
) -> BijectionReport:
    """Exhaustively verify one map at size n; never a silent pass.

    Checks membership of images, injectivity, both round trips,
    cardinalities, and that the last part of every image discriminates its
    origin.  Materializes both sides, so n is capped by `bound`.
    """
    spec = BIJECTIONS[name]
    if n < spec.min_n:
        raise DomainError(f"{name} requires n >= {spec.min_n}")
    if n > bound:
        raise DomainError(f"n={n} exceeds materialization bound {bound}")

    report = BijectionReport(name, n)
    fail = report.failures.append

    domain: list[TaggedSource] = []
    for origin, cls, total in spec.source_totals(n):
        items = [TaggedSource(origin, c) for c in enumerate_compositions(cls, total)]
        report.source_sizes[origin.value] = len(items)
        domain.extend(items)

    target = list(enumerate_compositions(spec.target, n))
    report.target_size = len(target)
    if len(domain) != len(target):
        fail(f"cardinality mismatch: |domain|={len(domain)} |target|={len(target)}")

    seen: dict[Composition, TaggedSource] = {}
    for src in domain:
        img = spec.forward(src, n)
        if sum(img) != n or not spec.target.contains(img):
            fail(f"image {format_composition(img)} of {src} not in target class")
            continue
        if img in seen:
            fail(
                f"not injective: {seen[img]} and {src} both map to "
                f"{format_composition(img)}"
            )
            continue
        seen[img] = src
        if _discriminate(name, img[-1]) is not src.origin:
            fail(
                f"last part {img[-1]} of {format_composition(img)} does not "
                f"discriminate origin {src.origin.value}"
            )
        back = spec.backward(img, n)
        if back != src:
            fail(f"backward(forward({src})) = {back}")

    for t in target:
        if t not in seen:
            fail(f"not surjective: {format_composition(t)} has no preimage")
            continue
        src = spec.backward(t, n)
        roundtrip = spec.forward(src, n)
        if roundtrip != t:
            fail(
                f"forward(backward({format_composition(t)})) = "
                f"{format_composition(roundtrip)}"
            )

    return report
