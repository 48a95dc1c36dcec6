"""Subshift descriptions and their compiled language models.

A subshift is given as the full shift, a shift of finite type (a list of
forbidden words) or a sofic shift (a labelled graph).  :func:`compile_shift`
turns any of these into a :class:`LanguageModel`: a trimmed deterministic
safety automaton with a single start state whose infinite runs from the start
are exactly the points of the subshift.

For a state set ``A(x)`` (the *acceptance profile* of a point ``x``: states
from which ``x`` labels an infinite run) the basic identity used everywhere is

    mu x in X   iff   end_state(mu) in A(x).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .automata import UNDEF, SafetyDFA, explore, live_states
from .errors import EmptyLanguageError, NotInLanguageError, SpecError
from .words import Alphabet, Point, format_word, primitive_root

StateSet = frozenset  # frozenset[int] of model states

KINDS = ("full", "sft", "sofic")


@dataclass(frozen=True)
class SubshiftSpec:
    """User-level description of a one-sided subshift."""

    alphabet: Alphabet
    kind: str = "full"
    forbidden: tuple[str, ...] = ()
    edges: tuple[tuple[str, str, str], ...] = ()
    name: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise SpecError(f"unknown kind {self.kind!r}; expected one of {KINDS}")
        if self.kind == "sft":
            if len(set(self.forbidden)) != len(self.forbidden):
                raise SpecError("forbidden words must be distinct")
            for w in self.forbidden:
                if not w:
                    raise SpecError("forbidden words must be nonempty")
                self.alphabet.check_word(w)
        if self.kind == "sofic":
            if not self.edges:
                raise SpecError("a sofic presentation needs at least one edge")
            for _, a, _ in self.edges:
                if a not in self.alphabet:
                    raise SpecError(f"edge label {a!r} is not in the alphabet")


def full_shift(symbols: str = "01") -> SubshiftSpec:
    return SubshiftSpec(Alphabet(symbols), "full", name=f"full shift on {symbols}")


def golden_mean() -> SubshiftSpec:
    return SubshiftSpec(Alphabet("01"), "sft", forbidden=("11",), name="golden mean shift")


def even_shift() -> SubshiftSpec:
    edges = (("A", "1", "A"), ("A", "0", "B"), ("B", "0", "A"))
    return SubshiftSpec(Alphabet("01"), "sofic", edges=edges, name="even shift")


BUILTINS = {"full": full_shift, "golden": golden_mean, "even": even_shift}


def parse_spec(text: str, name: str = "") -> SubshiftSpec:
    """Parse the line-oriented subshift file format.

    ::

        alphabet: 0 1
        kind: sft          # full | sft | sofic
        forbid: 11
        edge: A 0 B        # sofic only
    """
    alphabet = kind = None
    forbidden: list[str] = []
    edges: list[tuple[str, str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        key, sep, value = line.partition(":")
        if not sep:
            col = len(line) - len(line.lstrip()) + 1
            raise SpecError("expected 'key: value'", lineno, col)
        key = key.strip()
        colon = raw.index(":")
        col = colon + 2
        fields = value.split()

        def at(token: str) -> int:
            return raw.index(token, colon + 1) + 1
        if key == "alphabet":
            if not fields:
                raise SpecError("alphabet is empty", lineno, col)
            for f in fields:
                if len(f) != 1:
                    raise SpecError(f"symbols must be single characters, got {f!r}", lineno, at(f))
            try:
                alphabet = Alphabet("".join(fields))
            except SpecError as exc:
                raise SpecError(str(exc), lineno, col) from None
        elif key == "kind":
            if len(fields) != 1 or fields[0] not in KINDS:
                raise SpecError(f"kind must be one of {KINDS}", lineno, at(fields[0]) if fields else col)
            kind = fields[0]
        elif key in ("forbid", "edge"):
            if alphabet is None:
                raise SpecError("'alphabet:' must come first", lineno, 1)
            if key == "forbid":
                if len(fields) != 1:
                    raise SpecError("forbid takes one word", lineno, col)
                word = fields[0]
                for i, c in enumerate(word):
                    if c not in alphabet:
                        raise SpecError(f"symbol {c!r} not in alphabet", lineno, at(word) + i)
                forbidden.append(word)
            else:
                if len(fields) != 3:
                    raise SpecError("edge takes 'source symbol target'", lineno, col)
                if fields[1] not in alphabet:
                    sym_col = raw.index(fields[1], at(fields[0]) + len(fields[0]) - 1) + 1
                    raise SpecError(f"symbol {fields[1]!r} not in alphabet", lineno, sym_col)
                edges.append((fields[0], fields[1], fields[2]))
        else:
            raise SpecError(f"unknown key {key!r}", lineno, 1)
    if alphabet is None:
        raise SpecError("missing 'alphabet:' line")
    if kind is None:
        raise SpecError("missing 'kind:' line")
    if kind == "sft" and not forbidden:
        kind = "full"
    return SubshiftSpec(alphabet, kind, tuple(forbidden), tuple(edges), name=name)


def load_spec(path) -> SubshiftSpec:
    path = Path(path)
    return parse_spec(path.read_text(encoding="utf-8"), name=path.stem)


def format_spec(spec: SubshiftSpec) -> str:
    lines = [f"alphabet: {' '.join(spec.alphabet)}", f"kind: {spec.kind}"]
    lines += [f"forbid: {w}" for w in spec.forbidden]
    lines += [f"edge: {p} {a} {q}" for p, a, q in spec.edges]
    return "\n".join(lines) + "\n"


class LanguageModel:
    """Compiled subshift: a trimmed deterministic safety automaton.

    ``table[q][i]`` is the successor of state ``q`` on the i-th alphabet
    symbol, or ``-1``.  Every state is live.  ``labels[q]`` is a readable
    name (a remembered suffix for shifts of finite type, a set of
    presentation states for sofic shifts).  Instances are never mutated after
    construction; the dictionaries below are memo caches only.
    """

    def __init__(self, spec: SubshiftSpec, table, labels, start: int = 0):
        self.spec = spec
        self.alphabet = spec.alphabet
        self.symbols = spec.alphabet.symbols
        self.table = tuple(tuple(r) for r in table)
        self.labels = tuple(labels)
        self.start = start
        self._period_profiles: dict[str, frozenset] = {}
        self._tails: dict[frozenset, SafetyDFA | None] = {}
        self._layers: dict[int, dict[str, int]] = {0: {"": start}}
        self._realizable = None
        # per-module memo tables (products, memberships, level spaces)
        self.memo: dict[str, dict] = {}

    @property
    def states(self) -> range:
        return range(len(self.table))

    def __repr__(self):
        name = self.spec.name or self.spec.kind
        return f"<LanguageModel {name}: {len(self.table)} states>"

    def step(self, q: int, symbol: str) -> int:
        return self.table[q][self.symbols.index(symbol)]

    def run(self, word: str, q: int | None = None) -> int:
        q = self.start if q is None else q
        for c in word:
            if q == UNDEF:
                break
            q = self.table[q][self.symbols.index(c)]
        return q

    def label(self, q: int) -> str:
        return self.labels[q]


def _compile_sft(spec: SubshiftSpec):
    forbidden = set(spec.forbidden)
    memory = max(len(w) for w in forbidden) - 1
    symbols = spec.alphabet.symbols

    def step(u, i):
        ua = u + symbols[i]
        if any(ua[j:] in forbidden for j in range(len(ua))):
            return None
        return ua[-memory:] if memory else ""

    return explore("", step, len(symbols))


def _compile_sofic(spec: SubshiftSpec):
    names = sorted({p for p, _, _ in spec.edges} | {q for _, _, q in spec.edges})
    pos = {n: i for i, n in enumerate(names)}
    symbols = spec.alphabet.symbols
    graph = [[[] for _ in symbols] for _ in names]
    for p, a, q in spec.edges:
        graph[pos[p]][symbols.index(a)].append(pos[q])
    # states of the presentation that start an infinite path
    alive = set(range(len(names)))
    while True:
        keep = {p for p in alive if any(q in alive for row in graph[p] for q in row)}
        if keep == alive:
            break
        alive = keep
    if not alive:
        raise EmptyLanguageError("the presentation has no infinite path")

    def step(subset, i):
        nxt = frozenset(q for p in subset for q in graph[p][i] if q in alive)
        return nxt or None

    nodes, rows = explore(frozenset(alive), step, len(symbols))
    labels = ["{" + ",".join(names[p] for p in sorted(s)) + "}" for s in nodes]
    return labels, rows


def compile_shift(spec: SubshiftSpec) -> LanguageModel:
    """Compile a subshift description into a trimmed deterministic model.

    Shifts of finite type use the de Bruijn construction on words of length at
    most ``m`` (one less than the longest forbidden word); sofic shifts use the
    subset construction on the live part of the presentation.
    """
    n = len(spec.alphabet)
    if spec.kind == "full":
        labels, rows = ["e"], [[0] * n]
    elif spec.kind == "sft":
        nodes, rows = _compile_sft(spec)
        labels = [format_word(u) for u in nodes]
    else:
        labels, rows = _compile_sofic(spec)
    alive = live_states(rows)
    if 0 not in alive:
        raise EmptyLanguageError("the subshift is empty")

    def step(q, a):
        t = rows[q][a]
        return t if t != UNDEF and t in alive else None

    order, table = explore(0, step, n)
    return LanguageModel(spec, table, [labels[q] for q in order])


def is_factor(m: LanguageModel, w: str) -> bool:
    """True iff ``w`` is the prefix of some point of the subshift."""
    return m.run(w) != UNDEF


def end_states(m: LanguageModel, w: str) -> StateSet:
    q = m.run(w)
    return frozenset() if q == UNDEF else frozenset([q])


def _period_profile(m: LanguageModel, period: str) -> frozenset:
    cached = m._period_profiles.get(period)
    if cached is None:
        good = set(m.states)
        while True:
            nxt = {q for q in good if m.run(period, q) in good}
            if nxt == good:
                break
            good = nxt
        cached = m._period_profiles[period] = frozenset(good)
    return cached


def acceptance(m: LanguageModel, x: Point) -> StateSet:
    """States from which ``x`` labels an infinite run (may be empty)."""
    tail = _period_profile(m, x.period)
    return frozenset(q for q in m.states if m.run(x.transient, q) in tail)


def in_shift(m: LanguageModel, x: Point) -> bool:
    return m.start in acceptance(m, x)


def profile_of(m: LanguageModel, x: Point) -> StateSet:
    prof = acceptance(m, x)
    if not prof:
        raise NotInLanguageError(f"{x} is not a point of the subshift")
    return prof


def layer(m: LanguageModel, k: int) -> dict[str, int]:
    """All factors of length ``k`` (shortlex order) with their end states."""
    if k not in m._layers:
        below = layer(m, k - 1)
        cur = {}
        for w, q in below.items():
            for i, a in enumerate(m.symbols):
                t = m.table[q][i]
                if t != UNDEF:
                    cur[w + a] = t
        m._layers[k] = cur
    return m._layers[k]


def factors(m: LanguageModel, k: int) -> list[str]:
    return list(layer(m, k))


def pred_set(m: LanguageModel, x: Point, k: int) -> frozenset[str]:
    """Words ``mu`` of length ``k`` with ``mu x`` in the subshift."""
    prof = profile_of(m, x)
    return frozenset(w for w, q in layer(m, k).items() if q in prof)


def pred_sets_from_profile(m: LanguageModel, prof: StateSet, max_len: int):
    """``(P_1, ..., P_max_len)`` for any point whose acceptance profile is ``prof``."""
    return tuple(
        frozenset(w for w, q in layer(m, r).items() if q in prof)
        for r in range(1, max_len + 1)
    )


def _set_step(m: LanguageModel, subset: frozenset, i: int):
    nxt = []
    for q in subset:
        t = m.table[q][i]
        if t == UNDEF:
            return None
        nxt.append(t)
    return frozenset(nxt)


def tail_machine(m: LanguageModel, subset: StateSet) -> SafetyDFA | None:
    """Canonical automaton for the words accepted from every state of ``subset``."""
    subset = frozenset(subset)
    if subset not in m._tails:
        _, rows = explore(subset, lambda s, i: _set_step(m, s, i), len(m.symbols))
        m._tails[subset] = SafetyDFA.build(rows, len(m.symbols))
    return m._tails[subset]


def lasso(dfa: SafetyDFA, symbols: str, q: int = 0) -> Point:
    """Greedy eventually periodic word accepted from state ``q`` (smallest letters first)."""
    seen: dict[int, int] = {}
    word = []
    while q not in seen:
        seen[q] = len(word)
        a = next(i for i, t in enumerate(dfa.table[q]) if t != UNDEF)
        word.append(symbols[a])
        q = dfa.table[q][a]
    cut = seen[q]
    return Point.of("".join(word[:cut]), "".join(word[cut:]))


@dataclass(frozen=True)
class Profile:
    """A realizable acceptance profile together with a point realizing it."""

    states: StateSet
    witness: Point = field(compare=False)


def realizable_profiles(m: LanguageModel) -> list[Profile]:
    """Every acceptance profile ``A(x)`` of a point ``x`` of the subshift.

    A profile equals ``dom(f_mu)`` for the partial map ``f_mu: q -> q.mu`` once
    ``mu`` is a long enough prefix of ``x``; conversely ``dom(f_mu)`` is realized
    exactly when the image of ``f_mu`` is jointly live.  Enumerating the
    transition monoid breadth-first therefore lists all profiles, each with a
    short witness ``mu y``.
    """
    if m._realizable is not None:
        return m._realizable
    n = len(m.table)
    identity = tuple(range(n))

    def act(f, i):
        g = tuple(UNDEF if q == UNDEF else m.table[q][i] for q in f)
        return None if all(q == UNDEF for q in g) else g

    # breadth-first over words: first visit of each map gives a shortest mu
    found: dict[frozenset, Point] = {}
    frontier = [(identity, "")]
    seen = {identity}
    while frontier:
        nxt = []
        for f, mu in frontier:
            image = frozenset(q for q in f if q != UNDEF)
            dom = frozenset(q for q in range(n) if f[q] != UNDEF)
            if dom not in found:
                tail = tail_machine(m, image)
                if tail is not None:
                    found[dom] = lasso(tail, m.symbols).prepend(mu)
            for i, a in enumerate(m.symbols):
                g = act(f, i)
                if g is not None and g not in seen:
                    seen.add(g)
                    nxt.append((g, mu + a))
        frontier = nxt
    profs = [Profile(s, w) for s, w in found.items() if m.start in s]
    profs.sort(key=lambda p: sorted(p.states))
    m._realizable = profs
    return profs


def point_key(m: LanguageModel, x: Point):
    key = m.alphabet.word_key
    return (len(x.transient) + len(x.period), key(x.transient), key(x.period))


def enumerate_points(m: LanguageModel, max_transient: int, max_period: int) -> list[Point]:
    """All canonical points of the subshift with bounded transient and period."""
    found = set()
    periods = [
        w for n in range(1, max_period + 1) for w in m.alphabet.words(n)
        if primitive_root(w) == w
    ]
    for n in range(max_transient + 1):
        for u in layer(m, n):
            for w in periods:
                x = Point.of(u, w)
                if x not in found and in_shift(m, x):
                    found.add(x)
    return sorted(found, key=lambda x: point_key(m, x))


def describe(m: LanguageModel) -> dict:
    """JSON-friendly summary of the compiled model."""
    return {
        "kind": m.spec.kind,
        "alphabet": list(m.symbols),
        "start": m.labels[m.start],
        "states": list(m.labels),
        "transitions": [
            [m.labels[q], a, m.labels[t]]
            for q in m.states
            for a, t in zip(m.symbols, m.table[q])
            if t != UNDEF
        ],
    }
