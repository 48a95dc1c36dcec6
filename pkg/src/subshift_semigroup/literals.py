"""Parsers for the plain-text literals used on the command line.

Grammar (whitespace between tokens is free)::

    element  := "0" | "s[" word "]" [edata] "s*[" word "]"
    edata    := "E{" "v=" word ";" "F=" [word ("," word)*] "}"
    point    := word "(" word ")"

``e`` or an empty bracket denotes the empty word.  Errors report the
1-based column of the offending character.
"""
from __future__ import annotations

import re

from .errors import SpecError
from .language import LanguageModel
from .semigroup import Element, make_element, zero
from .sets import ConstraintSet
from .words import Alphabet, Point, parse_point

_EDATA = re.compile(r"\s*E\s*\{\s*v\s*=\s*(?P<v>[^;}]*?)\s*;\s*F\s*=\s*(?P<F>[^}]*?)\s*\}\s*")
_LEFT = re.compile(r"\s*s\s*\[\s*(?P<w>[^\]]*?)\s*\]\s*")
_RIGHT = re.compile(r"\s*s\s*\*\s*\[\s*(?P<w>[^\]]*?)\s*\]\s*")


def _word(alphabet: Alphabet, text: str, col: int) -> str:
    word = "" if text in ("", "e") else text
    for i, c in enumerate(word):
        if c not in alphabet:
            raise SpecError(f"symbol {c!r} is not in the alphabet {alphabet.symbols!r}", 1, col + i)
    return word


def _edata(alphabet: Alphabet, match: re.Match, offset: int) -> ConstraintSet:
    v = _word(alphabet, match.group("v"), offset + match.start("v") + 1)
    raw = match.group("F")
    F = set()
    if raw.strip():
        pos = offset + match.start("F")
        for part in raw.split(","):
            F.add(_word(alphabet, part.strip(), pos + len(part) - len(part.lstrip()) + 1))
            pos += len(part) + 1
    return ConstraintSet(frozenset(F), v)


def parse_edata(text: str, alphabet: Alphabet) -> ConstraintSet:
    """Parse ``E{v=<v>; F=<f1>,<f2>}``."""
    match = _EDATA.fullmatch(text)
    if match is None:
        raise SpecError(f"expected E{{v=...; F=...}}, got {text!r}", 1, 1)
    return _edata(alphabet, match, 0)


def parse_element(text: str, m: LanguageModel) -> Element:
    """Parse an element literal against the model's alphabet."""
    alphabet = m.alphabet
    if text.strip() == "0":
        return zero(m)
    left = _LEFT.match(text)
    if left is None:
        raise SpecError("element must start with s[...] or be 0", 1, 1)
    pos = left.end()
    alpha = _word(alphabet, left.group("w"), left.start("w") + 1)
    data = ConstraintSet()
    edata = _EDATA.match(text, pos)
    if edata is not None:
        data = _edata(alphabet, edata, 0)
        pos = edata.end()
    right = _RIGHT.match(text, pos)
    if right is None:
        raise SpecError("expected E{...} or s*[...]", 1, pos + 1)
    beta = _word(alphabet, right.group("w"), right.start("w") + 1)
    if right.end() != len(text):
        raise SpecError("unexpected trailing text", 1, right.end() + 1)
    return make_element(m, alpha, data.F, data.v, beta)


def parse_point_literal(text: str, alphabet: Alphabet) -> Point:
    return parse_point(text, alphabet)


def parse_word_literal(text: str, alphabet: Alphabet) -> str:
    return _word(alphabet, text.strip(), 1)
