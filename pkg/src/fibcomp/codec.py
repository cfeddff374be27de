"""Cut/join encoding of compositions, conjugation, and reversal.

A composition of n tiles a 1 x n board; the n-1 interior cell boundaries
are each either a cut (C, a part ends there) or a join (J, the part
continues).  The leftmost letter is the boundary after cell 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Composition, DomainError, check_composition

_SWAP = str.maketrans("CJ", "JC")


@dataclass(frozen=True)
class CutJoinSeq:
    """A word over {C, J} of length board - 1."""

    letters: str
    board: int

    def __post_init__(self) -> None:
        if self.board < 1:
            raise DomainError(f"board length must be >= 1, got {self.board}")
        if len(self.letters) != self.board - 1:
            raise DomainError(
                f"word length {len(self.letters)} != board {self.board} - 1"
            )
        if set(self.letters) - {"C", "J"}:
            raise DomainError(f"letters must be C/J, got {self.letters!r}")

    def swapped(self) -> "CutJoinSeq":
        return CutJoinSeq(self.letters.translate(_SWAP), self.board)


def encode(c: Composition) -> CutJoinSeq:
    """Cut/join word of c; the i-th letter is C iff a part ends at cell i."""
    check_composition(c)
    if not c:
        raise DomainError("the empty composition has no board to encode")
    chunks = ["J" * (p - 1) + "C" for p in c]
    return CutJoinSeq("".join(chunks)[:-1], sum(c))


def decode(w: CutJoinSeq) -> Composition:
    """Inverse of encode: split the board at every cut."""
    parts = []
    run = 1
    for ch in w.letters:
        if ch == "J":
            run += 1
        else:
            parts.append(run)
            run = 1
    parts.append(run)
    return tuple(parts)


def conjugate(c: Composition) -> Composition:
    """MacMahon's conjugate: swap C and J in the cut/join word.  Involution."""
    return decode(encode(c).swapped())


def reverse(c: Composition) -> Composition:
    check_composition(c)
    return tuple(reversed(c))
