"""Exact calculus of the sets ``C(F; v)`` carried by idempotents ``E(F; v)``.

``C(F; v)`` is the set of points ``v y`` of the subshift such that ``f y`` is
also a point for every ``f`` in ``F``.  Its tail language ``{y}`` is the set of
words accepted jointly from the end states of ``v`` and of every ``f``, so a
set is stored as its prefix plus the canonical minimized automaton of that
tail language (:class:`CanonSet`).  The same set can have many
``(F; v)`` descriptions; :class:`ConstraintSet` keeps one of them as data.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .automata import UNDEF, SafetyDFA, product
from .language import LanguageModel, tail_machine
from .words import Point, format_word


@dataclass(frozen=True)
class ConstraintSet:
    """Symbolic data ``(F; v)`` naming the idempotent ``E(F; v)``."""

    F: frozenset = frozenset()
    v: str = ""

    @classmethod
    def of(cls, F: Iterable[str] = (), v: str = "") -> "ConstraintSet":
        return cls(frozenset(F), v)

    def __str__(self):
        return format_edata(self)


def sorted_words(words, symbols: str) -> list[str]:
    return sorted(words, key=lambda w: (len(w), [symbols.index(c) for c in w]))


def format_edata(e: ConstraintSet, symbols: str | None = None) -> str:
    words = sorted_words(e.F, symbols) if symbols else sorted(e.F, key=lambda w: (len(w), w))
    return f"E{{v={format_word(e.v)}; F={','.join(format_word(f) for f in words)}}}"


class CanonSet:
    """Canonical form of a set ``C(F; v)``.

    ``prefix`` is the word ``v``; ``tail`` is the canonical automaton of the
    tail language, or ``None`` for the empty set (whose prefix is always
    ``""``).  ``data`` keeps the constraint data the set was built from, when
    there is one.
    """

    __slots__ = ("model", "prefix", "tail", "data", "_key")

    def __init__(self, model: LanguageModel, prefix: str, tail: SafetyDFA | None,
                 data: ConstraintSet | None = None):
        self.model = model
        self.prefix = prefix if tail is not None else ""
        self.tail = tail
        self.data = data
        self._key = None

    @property
    def empty(self) -> bool:
        return self.tail is None

    @property
    def key(self):
        """Hashable canonical key: equal keys iff equal sets.

        The longest common prefix of all points is pushed into the prefix;
        a set with a single point is keyed by that point.
        """
        if self._key is None:
            self._key = self._compute_key()
        return self._key

    def _compute_key(self):
        if self.tail is None:
            return ("empty",)
        symbols = self.model.symbols
        word = self.prefix
        q, seen = 0, {}
        while q not in seen:
            a = self.tail.forced_letter(q)
            if a is None:
                break
            seen[q] = len(word)
            word += symbols[a]
            q = self.tail.table[q][a]
        if q in seen:
            cut = seen[q]
            return ("point", Point.of(word[:cut], word[cut:]))
        tail = self.tail if q == 0 else SafetyDFA.build(self.tail.table, self.tail.n_letters, q)
        return ("set", word, tail)

    def __eq__(self, other):
        return isinstance(other, CanonSet) and set_equal(self, other)

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        if self.empty:
            return "CanonSet(empty)"
        label = format_edata(self.data, self.model.symbols) if self.data else f"prefix={format_word(self.prefix)}"
        return f"CanonSet({label}, tail_states={len(self.tail)})"


def empty_set(m: LanguageModel) -> CanonSet:
    return CanonSet(m, "", None)


def _indices(m: LanguageModel, word: str) -> list[int]:
    return [m.symbols.index(c) for c in word]


def make_set(m: LanguageModel, F: Iterable[str] = (), v: str = "") -> CanonSet:
    """Canonical form of ``C(F; v)``; the empty set if it has no points."""
    data = ConstraintSet.of(F, v)
    ends = {m.run(g) for g in data.F | {v}}
    if UNDEF in ends:
        return CanonSet(m, "", None, data)
    return CanonSet(m, v, tail_machine(m, frozenset(ends)), data)


def set_from_data(m: LanguageModel, e: ConstraintSet | None) -> CanonSet:
    if e is None:
        return empty_set(m)
    return make_set(m, e.F, e.v)


def is_empty(s: CanonSet) -> bool:
    return s.empty


def _covers(s: CanonSet, z: str) -> SafetyDFA | None:
    """Residual of ``s``'s tail by ``z`` if every tail word starts with ``z``."""
    q = 0
    for c in z:
        a = s.model.symbols.index(c)
        if s.tail.forced_letter(q) != a:
            return None
        q = s.tail.table[q][a]
    return SafetyDFA.build(s.tail.table, s.tail.n_letters, q)


def set_equal(a: CanonSet, b: CanonSet) -> bool:
    """Decide whether two canonical sets contain the same points."""
    if a.empty or b.empty:
        return a.empty and b.empty
    if a.prefix == b.prefix:
        return a.tail == b.tail
    if b.prefix.startswith(a.prefix):
        rest = _covers(a, b.prefix[len(a.prefix):])
        return rest is not None and rest == b.tail
    if a.prefix.startswith(b.prefix):
        rest = _covers(b, a.prefix[len(b.prefix):])
        return rest is not None and rest == a.tail
    return False


def intersect(a: CanonSet, b: CanonSet) -> CanonSet:
    """Intersection computed on the automata (independent of any ``(F; v)`` data)."""
    m = a.model
    if a.empty or b.empty:
        return empty_set(m)
    if b.prefix.startswith(a.prefix):
        a, b = b, a
    if not a.prefix.startswith(b.prefix):
        return empty_set(m)
    # a.prefix = b.prefix + z
    shorter = b.tail.residual(_indices(m, a.prefix[len(b.prefix):]))
    if shorter is None:
        return empty_set(m)
    return CanonSet(m, a.prefix, product(a.tail, shorter))


def subset(a: CanonSet, b: CanonSet) -> bool:
    return set_equal(intersect(a, b), a)


def product_idem(a: ConstraintSet, b: ConstraintSet) -> ConstraintSet | None:
    """Symbolic product ``E(F; v) E(G; w)``; ``None`` is the zero idempotent.

    If ``w = v z`` the product is ``E(G + Fz; w)``, if ``v = w z`` it is
    ``E(F + Gz; v)``, and otherwise the cylinders are disjoint.
    """
    F, v = a.F, a.v
    G, w = b.F, b.v
    if w.startswith(v):
        z = w[len(v):]
        return ConstraintSet(G | {f + z for f in F}, w)
    if v.startswith(w):
        z = v[len(w):]
        return ConstraintSet(F | {g + z for g in G}, v)
    return None


def conjugate_idem(w: str, e: ConstraintSet) -> ConstraintSet | None:
    """Symbolic ``s_w* E(F; v) s_w``; ``None`` is the zero idempotent."""
    F, v = e.F, e.v
    if v.startswith(w):
        return ConstraintSet(F | {v}, v[len(w):])
    if w.startswith(v):
        z = w[len(v):]
        return ConstraintSet(frozenset({w}) | {f + z for f in F}, "")
    return None


def contains_point(s: CanonSet, x: Point) -> bool:
    if s.empty or not x.startswith(s.prefix):
        return False
    return s.tail.accepts_point(x.shift(len(s.prefix)), s.model.symbols)


def enumerate_edata(m: LanguageModel, max_v: int, max_f: int, max_flen: int,
                    nonempty: bool = True) -> list[ConstraintSet]:
    """Constraint data with bounded sizes, one per distinct set, in shortlex order."""
    words = list(m.alphabet.words_upto(max_flen))
    out, seen = [], set()
    for v in m.alphabet.words_upto(max_v):
        for n in range(max_f + 1):
            for F in combinations(words, n):
                e = ConstraintSet.of(F, v)
                s = make_set(m, e.F, e.v)
                if nonempty and s.empty:
                    continue
                if s.key in seen:
                    continue
                seen.add(s.key)
                out.append(e)
    return out
