"""Reduced words in the free group F_n.

A letter is an (index, sign) pair; inside a :class:`Word` the pair is packed
into one signed integer (``+i`` for ``a_i``, ``-i`` for ``a_i^-1``) so words
are flat, hashable tuples.
"""

from __future__ import annotations

import re
from typing import Iterable, NamedTuple, Union


class Letter(NamedTuple):
    index: int
    sign: int

    def packed(self) -> int:
        return self.index * self.sign


RawLetter = Union[int, Letter, tuple]


class RankError(ValueError):
    """Raised when ranks of operands disagree or an index is out of range."""


def _pack(letter: RawLetter, rank: int) -> int:
    if isinstance(letter, tuple):
        index, sign = letter
        if sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {sign!r}")
        value = index * sign
    else:
        value = int(letter)
    if value == 0 or abs(value) > rank:
        raise RankError(f"letter {letter!r} out of range for rank {rank}")
    return value


def _free_reduce(seq: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for x in seq:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


class Word:
    """An element of F_n stored as a freely reduced sequence of packed letters."""

    __slots__ = ("rank", "seq", "_hash")

    def __init__(self, rank: int, seq: tuple[int, ...] = ()):
        # trusted constructor: callers guarantee seq is reduced and in range
        self.rank = rank
        self.seq = seq
        self._hash = None

    @classmethod
    def identity(cls, rank: int) -> "Word":
        return cls(rank, ())

    @classmethod
    def generator(cls, rank: int, index: int, sign: int = 1) -> "Word":
        return cls(rank, (_pack((index, sign), rank),))

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple(Letter(abs(x), 1 if x > 0 else -1) for x in self.seq)

    def __len__(self) -> int:
        return len(self.seq)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.rank == other.rank and self.seq == other.seq

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rank, self.seq))
        return self._hash

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __repr__(self) -> str:
        return f"Word({self.rank}, {format_word(self)!r})"

    def __str__(self) -> str:
        return format_word(self)


def reduce(letters: Iterable[RawLetter], rank: int) -> Word:
    """Freely reduce a raw letter sequence.

    Letters may be signed integers or ``(index, sign)`` pairs.
    """
    return Word(rank, _free_reduce(_pack(x, rank) for x in letters))


def _check_ranks(u: Word, v: Word) -> None:
    if u.rank != v.rank:
        raise RankError(f"rank mismatch: {u.rank} vs {v.rank}")


def multiply(u: Word, v: Word) -> Word:
    _check_ranks(u, v)
    a, b = u.seq, v.seq
    # cancel across the seam only; both halves are already reduced
    k = 0
    m = min(len(a), len(b))
    while k < m and a[len(a) - 1 - k] == -b[k]:
        k += 1
    return Word(u.rank, a[: len(a) - k] + b[k:])


def invert(w: Word) -> Word:
    return Word(w.rank, tuple(-x for x in reversed(w.seq)))


def power(w: Word, k: int) -> Word:
    base = w if k >= 0 else invert(w)
    out = Word.identity(w.rank)
    for _ in range(abs(k)):
        out = multiply(out, base)
    return out


def exponent_sums(w: Word) -> list[int]:
    sums = [0] * w.rank
    for x in w.seq:
        sums[abs(x) - 1] += 1 if x > 0 else -1
    return sums


def format_word(w: Word) -> str:
    if not w.seq:
        return "1"
    return "*".join(f"a{x}" if x > 0 else f"a{-x}^-1" for x in w.seq)


_WORD_TOKEN = re.compile(r"\s*(?:a(\d+)(?:\^(-?\d+))?|(1))\s*")


def parse_word(text: str, rank: int) -> Word:
    """Parse ``a1*a2^-1*a1`` (``1`` is the empty word)."""
    text = text.strip()
    if not text:
        raise ValueError("empty word text; use '1' for the identity")
    raw: list[int] = []
    for part in text.split("*"):
        m = _WORD_TOKEN.fullmatch(part)
        if not m:
            raise ValueError(f"cannot parse word factor {part!r}")
        if m.group(3):
            continue
        index = int(m.group(1))
        exp = int(m.group(2)) if m.group(2) is not None else 1
        letter = _pack(index, rank)
        raw.extend([letter if exp > 0 else -letter] * abs(exp))
    return Word(rank, _free_reduce(raw))
