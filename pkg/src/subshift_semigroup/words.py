"""Alphabets, finite words and eventually periodic points.

Words are plain ``str`` values; every symbol of an alphabet is a single
character, so concatenation and prefix tests are ordinary string operations.
The empty word is ``""`` and is written ``e`` in literals.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator

from .errors import SpecError

EMPTY_LITERAL = "e"
# characters used by the literal grammars; they cannot be symbols
RESERVED = set("e[](){},;=*#:") | {" ", "\t", "\n"}


@dataclass(frozen=True)
class Alphabet:
    """An ordered alphabet; the order drives every canonical ordering."""

    symbols: str

    def __post_init__(self):
        if not self.symbols:
            raise SpecError("alphabet must be nonempty")
        if len(set(self.symbols)) != len(self.symbols):
            raise SpecError(f"alphabet has duplicate symbols: {self.symbols!r}")
        bad = sorted(set(self.symbols) & RESERVED)
        if bad:
            raise SpecError(f"reserved characters cannot be symbols: {bad}")

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __contains__(self, item):
        return isinstance(item, str) and len(item) == 1 and item in self.symbols

    def index(self, symbol: str) -> int:
        return self.symbols.index(symbol)

    def check_word(self, word: str) -> str:
        for i, c in enumerate(word):
            if c not in self.symbols:
                raise SpecError(f"symbol {c!r} (position {i}) is not in the alphabet {self.symbols!r}")
        return word

    def word_key(self, word: str):
        """Shortlex key: shorter words first, then alphabet order."""
        return (len(word), tuple(self.symbols.index(c) for c in word))

    def words(self, length: int) -> Iterator[str]:
        """All words of exactly ``length`` letters in shortlex order."""
        for letters in product(self.symbols, repeat=length):
            yield "".join(letters)

    def words_upto(self, max_length: int) -> Iterator[str]:
        for n in range(max_length + 1):
            yield from self.words(n)

    def sort_words(self, words: Iterable[str]) -> list[str]:
        return sorted(words, key=self.word_key)


def format_word(word: str) -> str:
    return word if word else EMPTY_LITERAL


def parse_word(text: str, alphabet: Alphabet | None = None) -> str:
    text = text.strip()
    word = "" if text == EMPTY_LITERAL else text
    if alphabet is not None:
        alphabet.check_word(word)
    return word


def primitive_root(word: str) -> str:
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word[:d] * (n // d) == word:
            return word[:d]
    return word


@dataclass(frozen=True, order=False)
class Point:
    """The eventually periodic sequence ``transient + period + period + ...``.

    Instances are always in canonical form (primitive period, shortest
    transient), so two points are equal iff they denote the same sequence.
    Build them with :meth:`of` or :func:`parse_point`.
    """

    transient: str
    period: str

    @classmethod
    def of(cls, transient: str, period: str) -> "Point":
        if not period:
            raise ValueError("period must be nonempty")
        period = primitive_root(period)
        while transient and transient[-1] == period[-1]:
            transient = transient[:-1]
            period = period[-1] + period[:-1]
        return cls(transient, period)

    def letter(self, i: int) -> str:
        """The letter at 0-based position ``i``."""
        if i < len(self.transient):
            return self.transient[i]
        return self.period[(i - len(self.transient)) % len(self.period)]

    def prefix(self, n: int) -> str:
        if n <= len(self.transient):
            return self.transient[:n]
        rest = n - len(self.transient)
        reps = rest // len(self.period) + 1
        return self.transient + (self.period * reps)[:rest]

    def shift(self, n: int = 1) -> "Point":
        if n <= len(self.transient):
            return Point(self.transient[n:], self.period)
        k = (n - len(self.transient)) % len(self.period)
        return Point("", self.period[k:] + self.period[:k])

    def prepend(self, word: str) -> "Point":
        return Point.of(word + self.transient, self.period)

    def startswith(self, word: str) -> bool:
        return self.prefix(len(word)) == word

    def __str__(self):
        return f"{self.transient}({self.period})"


def parse_point(text: str, alphabet: Alphabet | None = None) -> Point:
    """Parse ``u(w)``, meaning ``u w w w ...``; ``u`` may be empty or ``e``."""
    text = text.strip()
    if not text.endswith(")") or "(" not in text:
        raise SpecError(f"point literal must look like u(w): {text!r}")
    head, _, tail = text[:-1].partition("(")
    transient = parse_word(head) if head else ""
    period = tail.strip()
    if not period:
        raise SpecError(f"point literal has an empty period: {text!r}")
    if alphabet is not None:
        alphabet.check_word(transient)
        alphabet.check_word(period)
    return Point.of(transient, period)
