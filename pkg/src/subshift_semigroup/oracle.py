"""Brute-force semantics on finite samples of eventually periodic points.

Nothing here looks at compiled models or canonical sets when deciding
membership: :func:`brute_member` reads the subshift description directly
(forbidden-word scan, or a path search in the sofic presentation).  Symbolic
elements are turned into explicit partial maps on a sample and compared
pointwise.

Composition convention: ``compose(f, g)`` applies ``g`` first, matching
``multiply(s, t)`` applying ``t`` first.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .errors import SampleMismatchError
from .language import LanguageModel, SubshiftSpec
from .semigroup import Element, apply, multiply
from .sets import CanonSet, contains_point
from .words import Point, primitive_root


def brute_member(spec: SubshiftSpec, x: Point) -> bool:
    """Decide ``x in X`` straight from the subshift description."""
    if spec.kind == "full":
        return True
    if spec.kind == "sft":
        longest = max(len(w) for w in spec.forbidden)
        # every window of the sequence occurs in this finite stretch
        reps = longest // len(x.period) + 2
        text = x.transient + x.period * reps
        return not any(w in text for w in spec.forbidden)
    # sofic: is there an infinite path labelled x?  Greatest fixpoint on the
    # set of presentation states that can read the period forever.
    states = {p for p, _, _ in spec.edges} | {q for _, _, q in spec.edges}

    def pre(word: str, target: set) -> set:
        cur = set(target)
        for c in reversed(word):
            cur = {p for p, a, q in spec.edges if a == c and q in cur}
        return cur

    good = set(states)
    while True:
        nxt = pre(x.period, good) & good
        if nxt == good:
            break
        good = nxt
    return bool(pre(x.transient, good))


@dataclass(frozen=True)
class PointSample:
    """A fixed finite set of points of the subshift."""

    ident: tuple
    points: tuple[Point, ...]
    members: frozenset = field(repr=False, compare=False)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, x):
        return x in self.members


def point_sample(spec: SubshiftSpec, max_transient: int = 4, max_period: int = 4,
                 closed: bool = True) -> PointSample:
    """Eventually periodic points with bounded transient and period, found by brute force.

    With ``closed`` the sample also contains every legal one-letter extension
    ``a x`` and every shift of its points, so compositions rarely leave it.
    """
    symbols = spec.alphabet
    periods = [w for n in range(1, max_period + 1) for w in symbols.words(n) if primitive_root(w) == w]
    base = {
        Point.of(u, w)
        for u in symbols.words_upto(max_transient)
        for w in periods
    }
    base = {x for x in base if brute_member(spec, x)}
    points = set(base)
    if closed:
        for x in base:
            for a in symbols:
                y = x.prepend(a)
                if brute_member(spec, y):
                    points.add(y)
        frontier = list(points)
        while frontier:
            y = frontier.pop().shift()
            if y not in points:
                points.add(y)
                frontier.append(y)
    key = symbols.word_key
    ordered = tuple(sorted(points, key=lambda x: (key(x.transient), key(x.period))))
    ident = (spec.kind, symbols.symbols, spec.forbidden, spec.edges, max_transient, max_period, closed)
    return PointSample(ident, ordered, frozenset(ordered))


@dataclass(frozen=True)
class ConcreteMap:
    """A partial map restricted to a sample.

    ``pairs`` holds the defined values; ``undetermined`` lists sample points
    whose value could not be decided because an intermediate point left the
    sample.  Comparisons ignore undetermined points on either side.
    """

    sample: PointSample
    pairs: dict
    undetermined: frozenset = frozenset()

    def __call__(self, x: Point) -> Point | None:
        return self.pairs.get(x)


def concretize(m: LanguageModel, s: Element, sample: PointSample) -> ConcreteMap:
    pairs = {}
    for x in sample:
        y = apply(s, x)
        if y is not None:
            pairs[x] = y
    return ConcreteMap(sample, pairs)


def reference_map(spec: SubshiftSpec, alpha: str, F: Iterable[str], v: str, beta: str,
                  sample: PointSample) -> ConcreteMap:
    """``s_alpha E(F; v) s_beta*`` evaluated by its definition, pointwise.

    ``x = beta v y`` is sent to ``alpha v y`` provided ``f y`` (for f in F),
    ``alpha v y`` and ``beta v y`` are points of the subshift.
    """
    F = list(F)
    head = beta + v
    pairs = {}
    for x in sample:
        if not x.startswith(head):
            continue
        y = x.shift(len(head))
        if all(brute_member(spec, y.prepend(f)) for f in F + [alpha + v, head]):
            pairs[x] = y.prepend(alpha + v)
    return ConcreteMap(sample, pairs)


def compose(f: ConcreteMap, g: ConcreteMap) -> ConcreteMap:
    """``f`` after ``g``."""
    if f.sample.ident != g.sample.ident:
        raise SampleMismatchError("maps are defined on different samples")
    sample = f.sample
    pairs, unknown = {}, set(g.undetermined)
    for x, y in g.pairs.items():
        if y not in sample or y in f.undetermined:
            unknown.add(x)
        elif y in f.pairs:
            pairs[x] = f.pairs[y]
    return ConcreteMap(sample, pairs, frozenset(unknown))


def map_equal(f: ConcreteMap, g: ConcreteMap) -> bool:
    if f.sample.ident != g.sample.ident:
        raise SampleMismatchError("maps are defined on different samples")
    skip = f.undetermined | g.undetermined
    return all(f.pairs.get(x) == g.pairs.get(x) for x in f.sample if x not in skip)


def set_extension(m: LanguageModel, s: CanonSet, sample: PointSample) -> frozenset:
    return frozenset(x for x in sample if contains_point(s, x))


@dataclass
class OracleReport:
    pairs_checked: int = 0
    mismatches: list = field(default_factory=list)
    undetermined_points: int = 0
    compared_points: int = 0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def as_dict(self) -> dict:
        return {
            "pairs_checked": self.pairs_checked,
            "mismatches": len(self.mismatches),
            "witnesses": [list(w) for w in self.mismatches[:10]],
            "compared_points": self.compared_points,
            "undetermined_points": self.undetermined_points,
        }


def check_products(m: LanguageModel, ball: list[Element], sample: PointSample,
                   product: Callable[[Element, Element], Element] = multiply) -> OracleReport:
    """Compare ``product`` (default :func:`multiply`) with composition of concrete maps
    on every ordered pair of the ball."""
    report = OracleReport()
    cache: dict = {}

    def conc(s):
        c = cache.get(s.key)
        if c is None:
            c = cache[s.key] = concretize(m, s, sample)
        return c

    for s in ball:
        for t in ball:
            lhs = conc(product(s, t))
            rhs = compose(conc(s), conc(t))
            report.pairs_checked += 1
            report.undetermined_points += len(rhs.undetermined)
            report.compared_points += len(sample) - len(rhs.undetermined)
            if not map_equal(lhs, rhs):
                report.mismatches.append((str(s), str(t)))
    return report
