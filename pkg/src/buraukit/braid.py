"""Braid words in the Artin generators of B_n.

Letters are stored in application order, left to right: the word
``"1 2 -1"`` applies sigma_1, then sigma_2, then sigma_1^-1, and its
Burau image is the matrix product in that same order. Strings written
in functional-composition order must be reversed before parsing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import BadToken, IndexOutOfRange, StrandMismatch, ZeroIndex

__all__ = [
    "BraidWord", "parse_word", "compose", "invert", "free_reduce",
    "exponent_sum", "kernel_word",
]

Letter = tuple[int, int]  # (generator index, sign)

_SEP = re.compile(r"[\s,]+")


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"strand count must be >= 1, got {self.strands}")
        for i, s in self.letters:
            if s not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {s}")
            if not 1 <= i <= self.strands - 1:
                raise IndexOutOfRange(
                    f"generator sigma_{i} does not exist in B_{self.strands}")

    @classmethod
    def from_ints(cls, ints: Iterable[int], strands: int) -> BraidWord:
        letters = []
        for k in ints:
            if k == 0:
                raise ZeroIndex("generator index 0 is not allowed")
            letters.append((abs(k), 1 if k > 0 else -1))
        return cls(strands, tuple(letters))

    def as_ints(self) -> list[int]:
        return [i * s for i, s in self.letters]

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return compose(self, other)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return invert(self) ** -k
        return BraidWord(self.strands, self.letters * k)

    def to_text(self) -> str:
        return " ".join(str(k) for k in self.as_ints())

    def to_json(self) -> dict:
        return {"strands": self.strands, "letters": self.as_ints()}

    @classmethod
    def from_json(cls, obj: dict) -> BraidWord:
        return cls.from_ints(obj["letters"], obj["strands"])

    def __str__(self):
        return self.to_text()


def parse_word(text: str, strands: int) -> BraidWord:
    """Parse whitespace- or comma-separated signed generator indices.

    ``k`` is sigma_k and ``-k`` its inverse; the empty string is the
    identity word.
    """
    if strands < 1:
        raise ValueError(f"strand count must be >= 1, got {strands}")
    ints = []
    for tok in _SEP.split(text.strip()):
        if not tok:
            continue
        try:
            k = int(tok)
        except ValueError:
            raise BadToken(f"not an integer: {tok!r}") from None
        if k == 0:
            raise ZeroIndex("generator index 0 is not allowed")
        if abs(k) > strands - 1:
            raise IndexOutOfRange(
                f"generator sigma_{abs(k)} does not exist in B_{strands} "
                f"(valid indices 1..{strands - 1})")
        ints.append(k)
    return BraidWord.from_ints(ints, strands)


def compose(w1: BraidWord, w2: BraidWord) -> BraidWord:
    if w1.strands != w2.strands:
        raise StrandMismatch(f"cannot compose B_{w1.strands} with B_{w2.strands}")
    return BraidWord(w1.strands, w1.letters + w2.letters)


def invert(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple((i, -s) for i, s in reversed(w.letters)))


def free_reduce(w: BraidWord) -> BraidWord:
    """Cancel adjacent ``x x^-1`` pairs until none remain (single stack pass)."""
    stack: list[Letter] = []
    for i, s in w.letters:
        if stack and stack[-1] == (i, -s):
            stack.pop()
        else:
            stack.append((i, s))
    return BraidWord(w.strands, tuple(stack))


def exponent_sum(w: BraidWord) -> int:
    """Image under the abelianization B_n -> Z; nonzero means nontrivial."""
    return sum(s for _, s in w.letters)


def kernel_word(i: int, k: int, strands: int) -> BraidWord:
    """The word (sigma_i sigma_{i+1} sigma_i)^k."""
    if not 1 <= i <= strands - 2:
        raise IndexOutOfRange(
            f"sigma_{i} sigma_{i + 1} sigma_{i} needs 1 <= i <= strands - 2; "
            f"got i={i} in B_{strands}")
    if k < 1:
        raise ValueError(f"power must be >= 1, got {k}")
    return BraidWord(strands, ((i, 1), (i + 1, 1), (i, 1)) * k)
