"""Finite levels of the inverse-limit description of the tight spectrum.

For an index ``(k, l)`` two points are ``(k, l)``-equivalent when they share
their first ``k`` letters and the tails after position ``k`` have the same
predecessor sets ``P_r`` for every ``r <= l``.  The classes form a finite set
(a *level space*); coarser indices receive bonding maps from finer ones.

Classes are enumerated from realizable acceptance profiles: the predecessor
sets of a tail are a function of its profile, so one length-``k`` factor and
one profile class determine a level class.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from .errors import IndexOrderError, IndexTooCoarseError, RectangleTooSmallError
from .language import (
    LanguageModel,
    layer,
    point_key,
    pred_set,
    pred_sets_from_profile,
    profile_of,
    realizable_profiles,
)
from .sets import (
    CanonSet,
    ConstraintSet,
    contains_point,
    format_edata,
    intersect,
    make_set,
    product_idem,
    subset,
)
from .words import Point, format_word


@dataclass(frozen=True, order=True)
class IndexPair:
    """An index ``(k, l)`` with ``0 <= k <= l``."""

    k: int
    l: int

    def __post_init__(self):
        if not (0 <= self.k <= self.l):
            raise ValueError(f"invalid index ({self.k},{self.l}): need 0 <= k <= l")

    def __str__(self):
        return f"({self.k},{self.l})"


def as_index(p) -> IndexPair:
    return p if isinstance(p, IndexPair) else IndexPair(*p)


def index_leq(p, q) -> bool:
    """``(k1, l1) <= (k2, l2)`` iff ``k1 <= k2`` and ``l1 - k1 <= l2 - k2``."""
    p, q = as_index(p), as_index(q)
    return p.k <= q.k and p.l - p.k <= q.l - q.k


def index_join(p, q) -> IndexPair:
    """An explicit common upper bound of two indices."""
    p, q = as_index(p), as_index(q)
    if p.k > q.k:
        p, q = q, p
    if p.k == q.k:
        return IndexPair(p.k, max(p.l, q.l))
    return IndexPair(q.k, max(p.l + q.k - p.k, q.l))


def rectangle(max_k: int, max_l: int) -> list[IndexPair]:
    """All indices with ``k <= max_k`` and ``l <= max_l``."""
    return [IndexPair(k, l) for k in range(max_k + 1) for l in range(k, max_l + 1)]


def past_equiv(m: LanguageModel, x: Point, y: Point, l: int) -> bool:
    """``P_r(x) = P_r(y)`` for every ``r <= l``."""
    return all(pred_set(m, x, r) == pred_set(m, y, r) for r in range(1, l + 1))


def kl_equiv(m: LanguageModel, x: Point, y: Point, p) -> bool:
    p = as_index(p)
    if x.prefix(p.k) != y.prefix(p.k):
        return False
    return past_equiv(m, x.shift(p.k), y.shift(p.k), p.l)


@dataclass(frozen=True)
class LevelClass:
    """One class of a level space.

    ``past`` is the tuple ``(P_1, ..., P_l)`` shared by the tails of the class
    and ``past_id`` its position among all such tuples at level ``l``.
    """

    index: IndexPair
    prefix: str
    past_id: int
    past: tuple = field(repr=False, compare=False)
    witness: Point = field(compare=False)

    @property
    def label(self) -> str:
        return f"{format_word(self.prefix)}|{self.past_id}"

    def __str__(self):
        return f"{self.index}[{self.label}]"


@dataclass(frozen=True)
class LevelSpace:
    index: IndexPair
    classes: tuple[LevelClass, ...]

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def lookup(self, prefix: str, past_id: int) -> LevelClass:
        for c in self.classes:
            if c.prefix == prefix and c.past_id == past_id:
                return c
        raise KeyError((prefix, past_id))


def _past_sort_key(m: LanguageModel, past: tuple):
    key = m.alphabet.word_key
    return tuple(tuple(sorted(key(w) for w in P)) for P in past)


def past_classes(m: LanguageModel, l: int) -> list[tuple[tuple, list]]:
    """The ``l``-past classes of realizable profiles, in canonical order.

    Each entry is ``(past, profiles)`` where ``past = (P_1, ..., P_l)``.
    """
    memo = m.memo.setdefault("past_classes", {})
    if l not in memo:
        groups: dict[tuple, list] = {}
        for prof in realizable_profiles(m):
            groups.setdefault(pred_sets_from_profile(m, prof.states, l), []).append(prof)
        ordered = sorted(groups.items(), key=lambda item: _past_sort_key(m, item[0]))
        memo[l] = ordered
    return memo[l]


def past_id_of(m: LanguageModel, x: Point, l: int) -> int:
    past = pred_sets_from_profile(m, profile_of(m, x), l)
    for i, (p, _) in enumerate(past_classes(m, l)):
        if p == past:
            return i
    raise AssertionError("profile of a point is always realizable")


def level_space(m: LanguageModel, p) -> LevelSpace:
    """All nonempty ``(k, l)``-classes, ordered by prefix then past class.

    The witness of a class is the smallest point ``w y`` (total length, then
    shortlex) among the profile witnesses ``y`` of the class.
    """
    p = as_index(p)
    memo = m.memo.setdefault("levels", {})
    if p in memo:
        return memo[p]
    pasts = past_classes(m, p.l)
    out = []
    for w, q in layer(m, p.k).items():
        for pid, (past, profs) in enumerate(pasts):
            cands = [prof.witness.prepend(w) for prof in profs if q in prof.states]
            if cands:
                wit = min(cands, key=lambda x: point_key(m, x))
                out.append(LevelClass(p, w, pid, past, wit))
    space = memo[p] = LevelSpace(p, tuple(out))
    return space


def class_of(m: LanguageModel, x: Point, p) -> LevelClass:
    p = as_index(p)
    return level_space(m, p).lookup(x.prefix(p.k), past_id_of(m, x.shift(p.k), p.l))


def bonding(m: LanguageModel, c: LevelClass, to) -> LevelClass:
    """Image of ``c`` under the bonding map to the coarser index ``to``."""
    to = as_index(to)
    if not index_leq(to, c.index):
        raise IndexOrderError(f"cannot bond {c.index} to {to}: target is not coarser")
    return class_of(m, c.witness, to)


class Relation(Enum):
    SUBSET = "subset"
    DISJOINT = "disjoint"


def _data_of(s) -> ConstraintSet:
    if isinstance(s, ConstraintSet):
        return s
    if s.data is None:
        raise ValueError("set carries no (F; v) data to derive its index from")
    return s.data


def lemma_index(s) -> IndexPair:
    """``(|v|, max{|f|, |v|})``: classes at finer indices lie inside or outside the set."""
    e = _data_of(s)
    return IndexPair(len(e.v), max([len(f) for f in e.F] + [len(e.v)]))


def _as_set(m: LanguageModel, s) -> CanonSet:
    return make_set(m, s.F, s.v) if isinstance(s, ConstraintSet) else s


def class_vs_set(m: LanguageModel, c: LevelClass, s) -> Relation:
    """Whether class ``c`` lies inside or outside the set ``s``.

    ``s`` is a :class:`CanonSet` with data or a :class:`ConstraintSet`; the
    index of ``c`` must dominate :func:`lemma_index` of ``s``.
    """
    cs = _as_set(m, s)
    if cs.empty:
        return Relation.DISJOINT
    need = lemma_index(s)
    if not index_leq(need, c.index):
        raise IndexTooCoarseError(f"class index {c.index} does not dominate {need}")
    return Relation.SUBSET if contains_point(cs, c.witness) else Relation.DISJOINT


def decompose_set(m: LanguageModel, s, p=None) -> list[LevelClass]:
    """Classes at index ``p`` (default: the set's own lemma index) whose union is ``s``."""
    cs = _as_set(m, s)
    if cs.empty:
        return []
    p = lemma_index(s) if p is None else as_index(p)
    return [c for c in level_space(m, p) if class_vs_set(m, c, s) is Relation.SUBSET]


def idempotent_universe(m: LanguageModel, max_v: int, max_f: int, max_flen: int) -> list[ConstraintSet]:
    """Nonzero idempotents with bounded data, one per distinct set."""
    from .sets import enumerate_edata

    return enumerate_edata(m, max_v, max_f, max_flen, nonempty=True)


@dataclass(frozen=True)
class FilterSet:
    """A set of idempotents relative to a finite universe."""

    universe: tuple[ConstraintSet, ...]
    members: frozenset

    def __contains__(self, e) -> bool:
        return e in self.members

    def __len__(self):
        return len(self.members)

    def sorted_members(self) -> list[ConstraintSet]:
        return [e for e in self.universe if e in self.members]


def filter_violations(m: LanguageModel, fs: FilterSet) -> dict[str, list]:
    """Witnesses against the filter axioms and the prefix spine."""
    sets = {e: make_set(m, e.F, e.v) for e in fs.universe}
    by_key: dict = {}
    for e, s in sets.items():
        by_key.setdefault(s.key, []).append(e)
    members = fs.sorted_members()
    out: dict[str, list] = {"zero": [], "product": [], "upward": [], "spine": []}
    for e in members:
        if sets[e].empty:
            out["zero"].append((e,))
    for i, e in enumerate(members):
        for f in members[i:]:
            prod = product_idem(e, f)
            ps = make_set(m, prod.F, prod.v) if prod is not None else None
            if ps is None or ps.empty:
                out["product"].append((e, f))
                continue
            for g in by_key.get(ps.key, []):
                if g not in fs.members:
                    out["product"].append((e, f, g))
            if not (e.v.startswith(f.v) or f.v.startswith(e.v)):
                out["spine"].append((e, f))
    for e in members:
        for f in fs.universe:
            if f not in fs.members and subset(sets[e], sets[f]):
                out["upward"].append((e, f))
    return out


def filter_extensions(m: LanguageModel, fs: FilterSet) -> list[ConstraintSet]:
    """Non-members whose set meets the intersection of all members.

    Each one extends ``fs`` to a larger filter of the universe, so a nonempty
    answer means the finite universe cannot tell ``fs`` from a bigger filter.
    This is expected for restrictions of ultrafilters and is not an axiom
    violation.
    """
    members = fs.sorted_members()
    meet = make_set(m, (), "")
    for e in members:
        meet = intersect(meet, make_set(m, e.F, e.v))
    return [f for f in fs.universe
            if f not in fs.members and not intersect(meet, make_set(m, f.F, f.v)).empty]


def ultrafilter_restrict(m: LanguageModel, x: Point, universe: Iterable[ConstraintSet]) -> FilterSet:
    """The idempotents of ``universe`` whose set contains ``x``."""
    profile_of(m, x)
    universe = tuple(universe)
    members = frozenset(e for e in universe if contains_point(make_set(m, e.F, e.v), x))
    return FilterSet(universe, members)


@dataclass(frozen=True)
class Tower:
    """The classes of one point at every index of a finite rectangle."""

    point: Point
    bounds: IndexPair
    assignments: dict = field(compare=False)

    def __getitem__(self, p) -> LevelClass:
        return self.assignments[as_index(p)]

    def signature(self, p) -> tuple:
        c = self[p]
        return (c.prefix, c.past_id)


def tower_of(m: LanguageModel, x: Point, bounds=(2, 4)) -> Tower:
    """Classes of ``x`` at every index ``(k, l)`` with ``k <= K`` and ``l <= L``."""
    K, L = as_index(bounds).k, as_index(bounds).l
    return Tower(x, IndexPair(K, L), {p: class_of(m, x, p) for p in rectangle(K, L)})


def tower_violations(m: LanguageModel, t: Tower) -> list[tuple]:
    """Index pairs where bonding the finer class does not give the coarser one."""
    bad = []
    for q, cq in t.assignments.items():
        for p, cp in t.assignments.items():
            if p != q and index_leq(p, q) and bonding(m, cq, p) != cp:
                bad.append((p, q))
    return bad


def theta_restrict(m: LanguageModel, t: Tower, universe: Iterable[ConstraintSet]) -> FilterSet:
    """Idempotents of ``universe`` containing some class of the tower.

    Only classes at indices dominating an idempotent's lemma index are
    consulted, since containment is only decided there.
    """
    universe = tuple(universe)
    members = set()
    for e in universe:
        need = lemma_index(e)
        usable = [c for p, c in t.assignments.items() if index_leq(need, p)]
        if not usable:
            raise RectangleTooSmallError(
                f"{format_edata(e, m.symbols)} needs index {need}, beyond {t.bounds}")
        if any(class_vs_set(m, c, e) is Relation.SUBSET for c in usable):
            members.add(e)
    return FilterSet(universe, frozenset(members))


def level_rows(m: LanguageModel, space: LevelSpace) -> list[dict]:
    rows = []
    for c in space:
        rows.append({
            "index": [c.index.k, c.index.l],
            "prefix": format_word(c.prefix),
            "past_class": c.past_id,
            "past": [m.alphabet.sort_words(P) for P in c.past],
            "witness": str(c.witness),
        })
    return rows


def level_table(m: LanguageModel, spaces: Iterable[LevelSpace]) -> str:
    lines = ["index  prefix  past  witness"]
    for space in spaces:
        for c in space:
            lines.append(f"{str(c.index):<6} {format_word(c.prefix):<7} {c.past_id:<5} {c.witness}")
    return "\n".join(lines)


def _covers(p: IndexPair) -> list[IndexPair]:
    """Indices immediately below ``p``."""
    out = []
    if p.k >= 1:
        out.append(IndexPair(p.k - 1, p.l - 1))
    if p.l > p.k:
        out.append(IndexPair(p.k, p.l - 1))
    return out


def bonding_dot(m: LanguageModel, indices: Iterable[IndexPair]) -> str:
    """DOT digraph: one node per class, edges for bonding maps between covering indices."""
    indices = [as_index(p) for p in indices]
    present = set(indices)

    def node(c: LevelClass) -> str:
        return f'"{c.index.k},{c.index.l}:{format_word(c.prefix)}|{c.past_id}"'

    lines = ["digraph levels {", "  rankdir=BT;"]
    for p in indices:
        for c in level_space(m, p):
            lines.append(f'  {node(c)} [label="{c.index} {format_word(c.prefix)}|{c.past_id}\\n{c.witness}"];')
    for p in indices:
        for q in _covers(p):
            if q in present:
                for c in level_space(m, p):
                    lines.append(f"  {node(c)} -> {node(bonding(m, c, q))};")
    lines.append("}")
    return "\n".join(lines)
