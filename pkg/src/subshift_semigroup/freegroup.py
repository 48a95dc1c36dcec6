"""Reduced words in the free group on an alphabet."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class FreeWord:
    """A reduced word: a tuple of ``(symbol, +1 | -1)`` pairs."""

    letters: tuple[tuple[str, int], ...] = ()

    @classmethod
    def reduce(cls, letters) -> "FreeWord":
        out: list[tuple[str, int]] = []
        for sym, exp in letters:
            if out and out[-1][0] == sym and out[-1][1] == -exp:
                out.pop()
            else:
                out.append((sym, exp))
        return cls(tuple(out))

    @classmethod
    def from_word(cls, word: str) -> "FreeWord":
        return cls.reduce((c, 1) for c in word)

    @classmethod
    def quotient(cls, alpha: str, beta: str) -> "FreeWord":
        """``alpha beta^-1``."""
        return cls.from_word(alpha) * cls.from_word(beta).inverse()

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord.reduce(self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((s, -e) for s, e in reversed(self.letters)))

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(s if e == 1 else f"{s}^-1" for s, e in self.letters)
