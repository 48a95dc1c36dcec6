"""Deterministic safety automata over infinite words.

A :class:`SafetyDFA` has a partial transition table and accepts an infinite
word iff reading it never hits an undefined transition.  Every automaton that
leaves this module is *trimmed* (every state has an infinite run) and
reachable from its start state, so acceptance of finite prefixes and of
infinite words coincide and ordinary DFA minimization decides equality of
infinite-word languages.
"""
from __future__ import annotations

from collections import deque
from typing import Callable, Hashable, Iterable

from .words import Point

UNDEF = -1

Table = tuple[tuple[int, ...], ...]


def live_states(table) -> set[int]:
    """States that admit an infinite run (greatest fixpoint)."""
    alive = set(range(len(table)))
    changed = True
    while changed:
        changed = False
        for q in list(alive):
            if not any(t != UNDEF and t in alive for t in table[q]):
                alive.discard(q)
                changed = True
    return alive


def explore(start: Hashable, step: Callable[[Hashable, int], Hashable | None], n_letters: int):
    """Breadth-first exploration of an implicitly given deterministic machine.

    Returns ``(nodes, table)`` where ``nodes[i]`` is the i-th discovered node and
    ``table[i][a]`` is the index of ``step(nodes[i], a)`` or ``UNDEF``.
    """
    index = {start: 0}
    nodes = [start]
    rows: list[list[int]] = []
    queue = deque([start])
    while queue:
        node = queue.popleft()
        row = []
        for a in range(n_letters):
            nxt = step(node, a)
            if nxt is None:
                row.append(UNDEF)
                continue
            if nxt not in index:
                index[nxt] = len(nodes)
                nodes.append(nxt)
                queue.append(nxt)
            row.append(index[nxt])
        rows.append(row)
    return nodes, rows


def _hopcroft(table, n_letters: int) -> list[int]:
    """Hopcroft partition refinement on a trimmed partial DFA.

    Undefined transitions go to an explicit sink, which starts in its own
    block; every other state is accepting.  Returns the block id of each
    original state.
    """
    n = len(table)
    sink = n
    succ = [list(row) for row in table] + [[sink] * n_letters]
    for row in succ:
        for a in range(n_letters):
            if row[a] == UNDEF:
                row[a] = sink
    inverse = [[[] for _ in range(n + 1)] for _ in range(n_letters)]
    for q in range(n + 1):
        for a in range(n_letters):
            inverse[a][succ[q][a]].append(q)

    blocks: list[set[int]] = [set(range(n)), {sink}] if n else [{sink}]
    block_of = [0] * n + [len(blocks) - 1]
    work = deque((len(blocks) - 1, a) for a in range(n_letters))
    in_work = set(work)
    while work:
        b, a = work.popleft()
        in_work.discard((b, a))
        splitter = {p for q in blocks[b] for p in inverse[a][q]}
        touched: dict[int, set[int]] = {}
        for p in splitter:
            touched.setdefault(block_of[p], set()).add(p)
        for bi, hit in touched.items():
            block = blocks[bi]
            if len(hit) == len(block):
                continue
            rest = block - hit
            blocks[bi] = hit
            new = len(blocks)
            blocks.append(rest)
            for p in rest:
                block_of[p] = new
            for c in range(n_letters):
                if (bi, c) in in_work:
                    work.append((new, c))
                    in_work.add((new, c))
                else:
                    small = bi if len(hit) <= len(rest) else new
                    work.append((small, c))
                    in_work.add((small, c))
    return block_of[:n]


class SafetyDFA:
    """Canonical trimmed and minimized deterministic safety automaton.

    Two instances over the same alphabet are equal iff they accept the same
    set of infinite words.  Construct through :meth:`build`.
    """

    __slots__ = ("n_letters", "table", "_hash", "_periods")

    def __init__(self, n_letters: int, table: Table):
        self.n_letters = n_letters
        self.table = table
        self._hash = hash((n_letters, table))
        self._periods: dict[tuple[int, ...], frozenset[int]] = {}

    @classmethod
    def build(cls, table, n_letters: int, start: int = 0) -> "SafetyDFA | None":
        """Trim, minimize and canonically renumber; ``None`` if the language is empty."""
        alive = live_states(table)
        if start not in alive:
            return None
        # drop dead states and anything unreachable from start
        def step(q, a):
            t = table[q][a]
            return t if t != UNDEF and t in alive else None

        nodes, rows = explore(start, step, n_letters)
        blocks = _hopcroft(rows, n_letters)
        # canonical numbering: breadth-first from start in letter order
        rep = {}
        for i, b in enumerate(blocks):
            rep.setdefault(b, i)

        def block_step(b, a):
            t = rows[rep[b]][a]
            return None if t == UNDEF else blocks[t]

        _, canon = explore(blocks[0], block_step, n_letters)
        return cls(n_letters, tuple(tuple(r) for r in canon))

    def __eq__(self, other):
        return (
            isinstance(other, SafetyDFA)
            and self.n_letters == other.n_letters
            and self.table == other.table
        )

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.table)

    def __repr__(self):
        return f"SafetyDFA(states={len(self.table)}, letters={self.n_letters})"

    def step(self, q: int, a: int) -> int:
        return self.table[q][a]

    def run(self, letters: Iterable[int], q: int = 0) -> int:
        for a in letters:
            if q == UNDEF:
                return UNDEF
            q = self.table[q][a]
        return q

    def residual(self, letters: Iterable[int]) -> "SafetyDFA | None":
        """The language of tails ``y`` such that ``letters + y`` is accepted."""
        q = self.run(letters)
        if q == UNDEF:
            return None
        return SafetyDFA.build(self.table, self.n_letters, q)

    def forced_letter(self, q: int) -> int | None:
        """The only letter readable from ``q``, or ``None`` if there are several."""
        defined = [a for a, t in enumerate(self.table[q]) if t != UNDEF]
        return defined[0] if len(defined) == 1 else None

    def accepting_from(self, period) -> frozenset[int]:
        """States accepting ``period`` repeated forever (greatest fixpoint)."""
        period = tuple(period)
        if period in self._periods:
            return self._periods[period]
        good = set(range(len(self.table)))
        while True:
            nxt = {q for q in good if self.run(period, q) in good}
            if nxt == good:
                break
            good = nxt
        self._periods[period] = frozenset(good)
        return self._periods[period]

    def accepts_point(self, point: Point, symbols: str, q: int = 0) -> bool:
        idx = [symbols.index(c) for c in point.period]
        q = self.run((symbols.index(c) for c in point.transient), q)
        return q != UNDEF and q in self.accepting_from(idx)


def product(a: SafetyDFA, b: SafetyDFA) -> SafetyDFA | None:
    """Intersection of two safety languages."""
    n = a.n_letters

    def step(pair, c):
        p, q = pair
        s, t = a.table[p][c], b.table[q][c]
        return None if s == UNDEF or t == UNDEF else (s, t)

    _, rows = explore((0, 0), step, n)
    return SafetyDFA.build(rows, n)
