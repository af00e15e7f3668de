"""Words in a free group of declared rank.

A letter is a signed integer: ``k`` is the k-th generator, ``-k`` its
inverse (1-based, ``1 <= k <= rank``).  Two notations are parsed:

* compact, case-sensitive letters ``X Y Z ...`` with lowercase meaning
  the inverse (ranks <= 3 by default, or any rank with a custom
  letter table), and
* indexed tokens ``X1``, ``X2^-1`` for arbitrary rank.

The canonical printer always emits the indexed form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

__all__ = [
    "GeneratorSymbol",
    "Word",
    "WordSyntaxError",
    "parse_word",
    "DEFAULT_LETTERS",
]


class GeneratorSymbol(NamedTuple):
    """A generator or its inverse; ``index`` is 1-based."""

    index: int
    inverted: bool = False

    @property
    def letter(self) -> int:
        return -self.index if self.inverted else self.index

    @classmethod
    def from_letter(cls, g: int) -> "GeneratorSymbol":
        return cls(abs(g), g < 0)

#: Default single-letter tables by rank for the compact notation.
DEFAULT_LETTERS: dict[int, Mapping[str, int]] = {
    1: {"X": 1},
    2: {"X": 1, "Y": 2},
    3: {"X": 1, "Y": 2, "Z": 3},
}

_ALLOWED_COMPACT = set("XYZUVWABCDPQ")


class WordSyntaxError(ValueError):
    """Raised on malformed word text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for g in letters:
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A word in the free group of rank ``rank``.

    Letters are stored as given; use :meth:`reduce` for the freely
    reduced representative.  Instances are immutable and hashable, so
    they are safe to share between threads and to use as cache keys.
    """

    rank: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"rank must be >= 1, got {self.rank}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for g in self.letters:
            if g == 0 or abs(g) > self.rank:
                raise ValueError(
                    f"letter {g} out of range for rank {self.rank}"
                )

    # -- basic structure ------------------------------------------------

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def symbols(self) -> tuple[GeneratorSymbol, ...]:
        return tuple(GeneratorSymbol.from_letter(g) for g in self.letters)

    @property
    def is_identity(self) -> bool:
        return not self.reduce().letters

    @property
    def is_reduced(self) -> bool:
        return all(
            self.letters[i] != -self.letters[i + 1]
            for i in range(len(self.letters) - 1)
        )

    @property
    def is_cyclically_reduced(self) -> bool:
        w = self.letters
        return self.is_reduced and (len(w) < 2 or w[0] != -w[-1])

    # -- group operations ------------------------------------------------

    def reduce(self) -> "Word":
        """Freely reduced representative; idempotent."""
        return Word(self.rank, _free_reduce(self.letters))

    def inverse(self) -> "Word":
        return Word(self.rank, tuple(-g for g in reversed(self.letters)))

    def __mul__(self, other: "Word") -> "Word":
        if self.rank != other.rank:
            raise ValueError(
                f"rank mismatch: {self.rank} != {other.rank}"
            )
        return Word(self.rank, _free_reduce(self.letters + other.letters))

    def __invert__(self) -> "Word":
        return self.inverse()

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        w = Word.identity(self.rank)
        for _ in range(n):
            w = w * self
        return w

    def conjugate_by(self, g: "Word") -> "Word":
        """g * self * g^-1."""
        return g * self * g.inverse()

    def cyclic_reduce(self) -> tuple["Word", "Word"]:
        """Return ``(core, conjugator)`` with self = conjugator * core * conjugator^-1.

        The core is cyclically reduced: its first letter is not inverse
        to its last.
        """
        w = self.reduce().letters
        pre: list[int] = []
        while len(w) >= 2 and w[0] == -w[-1]:
            pre.append(w[0])
            w = w[1:-1]
        return Word(self.rank, w), Word(self.rank, tuple(pre))

    @staticmethod
    def identity(rank: int) -> "Word":
        return Word(rank, ())

    @staticmethod
    def generator(rank: int, index: int, inverted: bool = False) -> "Word":
        if not 1 <= index <= rank:
            raise ValueError(f"generator index {index} exceeds rank {rank}")
        return Word(rank, (-index if inverted else index,))

    # -- printing ---------------------------------------------------------

    def canonical(self) -> str:
        """Canonical indexed form, e.g. ``X1 X2^-1``; empty for the identity."""
        return " ".join(
            f"X{abs(g)}" if g > 0 else f"X{abs(g)}^-1" for g in self.letters
        )

    def __str__(self) -> str:
        return self.canonical() or "<identity>"

    def __repr__(self) -> str:
        return f"Word(rank={self.rank}, {self.canonical()!r})"


_TOKEN = re.compile(r"\s*([A-Za-z])(\d+)?(?:\^(-?\d+))?")


def parse_word(
    text: str,
    rank: int,
    letters: Mapping[str, int] | None = None,
) -> Word:
    """Parse ``text`` as a word of the given rank and return it reduced.

    ``letters`` maps compact single letters to generator indices; by
    default ``X, Y, Z -> 1, 2, 3`` (restricted to the rank).  Indexed
    tokens ``X<k>`` and ``X<k>^-1`` work for any rank.  Exponents
    ``^n`` are accepted on any token.

    >>> parse_word("X Y", 2).canonical()
    'X1 X2'
    >>> parse_word("X x", 2).is_identity
    True
    >>> parse_word("X1 X2^-1 X3", 3).canonical()
    'X1 X2^-1 X3'
    """
    if letters is None:
        letters = DEFAULT_LETTERS.get(min(rank, 3), DEFAULT_LETTERS[3])
    out: list[int] = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise WordSyntaxError(f"unexpected character {text[pos]!r}", pos)
        letter, digits, exponent = m.group(1), m.group(2), m.group(3)
        if digits is not None:
            if letter != "X":
                raise WordSyntaxError(
                    f"indexed tokens must use 'X', got {letter!r}", pos
                )
            index = int(digits)
            inverted = False
        else:
            upper = letter.upper()
            if upper not in _ALLOWED_COMPACT:
                raise WordSyntaxError(f"unknown letter {letter!r}", pos)
            if upper not in letters:
                raise WordSyntaxError(
                    f"letter {upper!r} not in the declared table", pos
                )
            index = letters[upper]
            inverted = letter.islower()
        if not 1 <= index <= rank:
            raise WordSyntaxError(
                f"generator index {index} exceeds rank {rank}", pos
            )
        power = 1 if exponent is None else int(exponent)
        if inverted:
            power = -power
        g = index if power > 0 else -index
        out.extend([g] * abs(power))
        pos = m.end()
    return Word(rank, _free_reduce(out))
