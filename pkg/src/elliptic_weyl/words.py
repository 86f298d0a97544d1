"""Group kinds, generator alphabets and words."""

from __future__ import annotations

import enum
import re
from typing import Iterable, Sequence

Word = tuple[str, ...]

_PRIMES = {"′": "'", "’": "'"}


class GroupKind(enum.Enum):
    A11STAR = "a11star"
    A11 = "a11"

    @property
    def generators(self) -> tuple[str, ...]:
        if self is GroupKind.A11STAR:
            return ("0", "1", "1'")
        return ("0", "0'", "1", "1'")

    @property
    def label(self) -> str:
        return "A1(1,1)*" if self is GroupKind.A11STAR else "A1(1,1)"

    @property
    def coxeter_word(self) -> Word:
        """Product of all simple reflections: r0 r1 r1' resp. r0 r0' r1 r1'."""
        if self is GroupKind.A11STAR:
            return ("0", "1", "1'")
        return ("0", "0'", "1", "1'")

    @classmethod
    def parse(cls, value: "GroupKind | str") -> GroupKind:
        if isinstance(value, GroupKind):
            return value
        key = str(value).strip().lower().replace("_", "").replace("-", "")
        for kind in cls:
            if kind.value == key:
                return kind
        raise ValueError(f"unknown group {value!r}; expected one of {[k.value for k in cls]}")


class WordParseError(ValueError):
    def __init__(self, token: str, position: int, kind: GroupKind):
        self.token = token
        self.position = position
        self.kind = kind
        super().__init__(
            f"unknown generator {token!r} at position {position} for {kind.value} "
            f"(allowed: {' '.join(kind.generators)})"
        )


def check_word(kind: GroupKind, word: Iterable[str]) -> Word:
    word = tuple(word)
    gens = kind.generators
    for pos, g in enumerate(word):
        if g not in gens:
            raise WordParseError(g, pos, kind)
    return word


def parse_word(kind: GroupKind | str, text: str) -> Word:
    """Parse ``"0 1 1'"`` or ``"0,0',1,1'"`` into a tuple of generator names.

    Positions in errors are 0-based token indices.
    """
    kind = GroupKind.parse(kind)
    for alias, ascii_prime in _PRIMES.items():
        text = text.replace(alias, ascii_prime)
    tokens = [t for t in re.split(r"[\s,]+", text.strip()) if t]
    return check_word(kind, tokens)


def format_word(word: Sequence[str]) -> str:
    return " ".join(word)


def inverse_word(word: Sequence[str]) -> Word:
    # every generator is an involution
    return tuple(reversed(word))


def word_power(word: Sequence[str], n: int) -> Word:
    if n >= 0:
        return tuple(word) * n
    return inverse_word(word) * (-n)
