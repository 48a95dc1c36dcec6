"""Elements of the inverse semigroup of a subshift.

Every nonzero element is a partial bijection ``s_alpha E(F; v) s_beta*``
sending ``beta v y`` to ``alpha v y`` for the tails ``y`` allowed by
``E(F; v)``.  Elements are kept in lowest terms (``alpha`` and ``beta`` do not
end in the same letter) together with the canonical form of their domain
``C(F + {alpha v}; beta v)``.  Two elements are equal iff they agree as
partial maps: same domain and either the same ``alpha``, ``beta`` or, when
the domain is a single point, the same image of that point.  Distinct
lowest-terms pairs can only coincide on a one-point domain (sofic shifts
have such sets, e.g. ``{10^inf}`` in the even shift).  The ``(F; v)`` data
is only a certificate.

Products are computed with the seven-case prefix analysis and always
renormalized through :func:`make_element`, which also detects zero.  The
product ``s * t`` is the composite map "first ``t``, then ``s``".
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable

from .errors import NotInLanguageError, UndefinedOnZeroError
from .freegroup import FreeWord
from .language import LanguageModel, in_shift
from .sets import (
    CanonSet,
    ConstraintSet,
    contains_point,
    empty_set,
    make_set,
    set_equal,
    sorted_words,
)
from .words import Point


class Element:
    """An element of the inverse semigroup; build with :func:`make_element`."""

    __slots__ = ("model", "alpha", "beta", "data", "domain", "_range", "_key")

    def __init__(self, model: LanguageModel, alpha: str, beta: str,
                 data: ConstraintSet | None, domain: CanonSet):
        self.model = model
        self.alpha = alpha
        self.beta = beta
        self.data = data
        self.domain = domain
        self._range = None
        self._key = None

    @property
    def is_zero(self) -> bool:
        return self.data is None

    @property
    def key(self):
        if self._key is None:
            dk = self.domain.key
            if self.is_zero:
                self._key = ("zero",)
            elif dk[0] == "point":
                self._key = ("map", dk[1], _image(self, dk[1]))
            else:
                self._key = (self.alpha, self.beta, dk)
        return self._key

    def __eq__(self, other):
        return isinstance(other, Element) and other.model is self.model and equal(self, other)

    def __hash__(self):
        return hash(self.key)

    def __mul__(self, other: "Element") -> "Element":
        return multiply(self, other)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"Element({format_element(self)})"


def format_element(s: Element) -> str:
    if s.is_zero:
        return "0"
    symbols = s.model.symbols
    F = ",".join(f or "e" for f in sorted_words(s.data.F, symbols))
    v = s.data.v or "e"
    return f"s[{s.alpha}] E{{v={v}; F={F}}} s*[{s.beta}]"


def zero(m: LanguageModel) -> Element:
    return Element(m, "", "", None, empty_set(m))


def make_element(m: LanguageModel, alpha: str = "", F: Iterable[str] = (), v: str = "",
                 beta: str = "") -> Element:
    """``s_alpha E(F; v) s_beta*`` reduced to lowest terms, or zero."""
    F = frozenset(F)
    while alpha and beta and alpha[-1] == beta[-1]:
        v = alpha[-1] + v
        alpha, beta = alpha[:-1], beta[:-1]
    domain = make_set(m, F | {alpha + v}, beta + v)
    if domain.empty:
        return zero(m)
    return Element(m, alpha, beta, ConstraintSet(F, v), domain)


def identity(m: LanguageModel) -> Element:
    return make_element(m)


def generator(m: LanguageModel, a: str) -> Element:
    """The map ``s_a: x -> a x``."""
    return make_element(m, a, (), "", "")


def idempotent(m: LanguageModel, e: ConstraintSet) -> Element:
    return make_element(m, "", e.F, e.v, "")


@dataclass(frozen=True)
class ProductTerms:
    """Unnormalized output of the seven-case product analysis."""

    case: int
    alpha: str = ""
    F: frozenset = frozenset()
    v: str = ""
    beta: str = ""


def all_product_terms(s: Element, t: Element) -> list[ProductTerms]:
    """Every case of the product analysis whose conditions hold, in case order.

    Boundary configurations (e.g. ``beta = delta`` or ``z = w``) satisfy more
    than one case; all of them must describe the same element.
    """
    a, F, v, b = s.alpha, s.data.F, s.data.v, s.beta
    d, G, w, h = t.alpha, t.data.F, t.data.v, t.beta
    out = []
    if d.startswith(b):
        g = d[len(b):]
        if g.startswith(v):
            z = g[len(v):]
            out.append(ProductTerms(1, a + g, frozenset({f + z + w for f in F} | G | {g + w, d + w}), w, h))
        if v.startswith(g):
            z = v[len(g):]
            if z.startswith(w):
                r = z[len(w):]
                out.append(ProductTerms(2, a + g, frozenset(F | {x + r for x in G} | {b + v}), z, h))
            if w.startswith(z):
                r = w[len(z):]
                out.append(ProductTerms(3, a + g, frozenset({f + r for f in F} | G | {b + v + r}), w, h))
    if b.startswith(d):
        g = b[len(d):]
        if g.startswith(w):
            z = g[len(w):]
            out.append(ProductTerms(4, a, frozenset(F | {x + z + v for x in G} | {g + v, b + v}), v, h + g))
        if w.startswith(g):
            z = w[len(g):]
            if z.startswith(v):
                r = z[len(v):]
                out.append(ProductTerms(5, a, frozenset({f + r for f in F} | G | {d + w}), z, h + g))
            if v.startswith(z):
                r = v[len(z):]
                out.append(ProductTerms(6, a, frozenset(F | {x + r for x in G} | {d + w + r}), v, h + g))
    return out


def product_terms(s: Element, t: Element) -> ProductTerms:
    """Case analysis for ``(s_a E(F;v) s_b*)(s_d E(G;w) s_h*)``.

    Cases are tried in order and the first match wins; case 7 is zero.
    """
    cases = all_product_terms(s, t)
    return cases[0] if cases else ProductTerms(7)


def multiply(s: Element, t: Element) -> Element:
    """The product ``s t`` (apply ``t`` first)."""
    m = s.model
    if s.is_zero or t.is_zero:
        return zero(m)
    memo = m.memo.setdefault("products", {})
    key = (s.key, t.key)
    hit = memo.get(key)
    if hit is None:
        p = product_terms(s, t)
        hit = zero(m) if p.case == 7 else make_element(m, p.alpha, p.F, p.v, p.beta)
        memo[key] = hit
    return hit


def star(s: Element) -> Element:
    if s.is_zero:
        return s
    out = Element(s.model, s.beta, s.alpha, s.data, range_(s))
    out._range = s.domain
    return out


def equal(s: Element, t: Element) -> bool:
    if s.is_zero or t.is_zero:
        return s.is_zero and t.is_zero
    if not set_equal(s.domain, t.domain):
        return False
    if s.alpha == t.alpha and s.beta == t.beta:
        return True
    # different lowest terms agree only on a one-point domain
    dk = s.domain.key
    return dk[0] == "point" and _image(s, dk[1]) == _image(t, dk[1])


def _image(s: Element, x: Point) -> Point:
    return x.shift(len(s.beta)).prepend(s.alpha)


def source(s: Element) -> CanonSet:
    """Domain of ``s``: ``C(F + {alpha v}; beta v)``."""
    return s.domain


def range_(s: Element) -> CanonSet:
    """Image of ``s``: ``C(F + {beta v}; alpha v)``."""
    if s._range is None:
        if s.is_zero:
            s._range = s.domain
        else:
            v = s.data.v
            s._range = make_set(s.model, s.data.F | {s.beta + v}, s.alpha + v)
    return s._range


def is_idempotent(s: Element) -> bool:
    return equal(multiply(s, s), s)


def leq(s: Element, t: Element) -> bool:
    """Natural partial order: ``s <= t`` iff ``t s* s = s``."""
    return equal(multiply(t, multiply(star(s), s)), s)


def apply(s: Element, x: Point) -> Point | None:
    """Image of the point ``x``, or ``None`` if ``x`` is outside the domain."""
    if s.is_zero:
        if not in_shift(s.model, x):
            raise NotInLanguageError(f"{x} is not a point of the subshift")
        return None
    memo = s.model.memo.setdefault("membership", {})
    key = (s.domain.key, x)
    inside = memo.get(key)
    if inside is None:
        inside = memo[key] = contains_point(s.domain, x)
    if not inside:
        if not in_shift(s.model, x):
            raise NotInLanguageError(f"{x} is not a point of the subshift")
        return None
    return _image(s, x)


def phi(s: Element) -> FreeWord:
    """Free-group grading ``alpha beta^-1`` of the lowest-terms representative.

    On shifts with one-point constraint sets two representatives of the same
    map can have different gradings; the value follows the representative.
    """
    if s.is_zero:
        raise UndefinedOnZeroError("phi is not defined on 0")
    return FreeWord.quotient(s.alpha, s.beta)


def max_above(s: Element) -> Element:
    """The element ``s_alpha s_beta*`` above ``s``, from its representative."""
    if s.is_zero:
        raise UndefinedOnZeroError("0 has no unique maximal element above it")
    return make_element(s.model, s.alpha, (), "", s.beta)


def enumerate_ball(m: LanguageModel, max_len: int, max_f: int, max_flen: int) -> list[Element]:
    """Distinct nonzero elements with ``|alpha|, |beta|, |v| <= max_len``,
    at most ``max_f`` constraint words, each of length at most ``max_flen``.
    """
    words = list(m.alphabet.words_upto(max_len))
    fwords = list(m.alphabet.words_upto(max_flen))
    families = [frozenset(F) for n in range(max_f + 1) for F in combinations(fwords, n)]
    seen: dict = {}
    for alpha in words:
        for beta in words:
            for v in words:
                for F in families:
                    s = make_element(m, alpha, F, v, beta)
                    if not s.is_zero and s.key not in seen:
                        seen[s.key] = s
    return list(seen.values())


@dataclass
class AuditReport:
    """Counts of checked instances and witnesses of violations, per property."""

    checked: dict[str, int] = field(default_factory=dict)
    violations: dict[str, list] = field(default_factory=dict)
    max_witnesses: int = 10

    def record(self, name: str, ok: bool, *witness):
        self.checked[name] = self.checked.get(name, 0) + 1
        bucket = self.violations.setdefault(name, [])
        if not ok:
            bucket.append(tuple(str(w) for w in witness))

    @property
    def total_violations(self) -> int:
        return sum(len(v) for v in self.violations.values())

    @property
    def ok(self) -> bool:
        return self.total_violations == 0

    def as_dict(self) -> dict:
        return {
            "checked": dict(sorted(self.checked.items())),
            "violations": {k: len(v) for k, v in sorted(self.violations.items())},
            "witnesses": {k: v[: self.max_witnesses] for k, v in sorted(self.violations.items()) if v},
            "total_violations": self.total_violations,
        }


def audit(m: LanguageModel, ball: list[Element], *, triples: bool = True,
          product: Callable[[Element, Element], Element] = multiply) -> AuditReport:
    """Bounded check of the inverse-semigroup laws and grading properties.

    ``product`` may be replaced to audit an alternative multiplication.
    Universal statements over idempotents range over the idempotents of the
    ball only.
    """
    report = AuditReport()
    mul = product

    def le(s, t):
        return equal(mul(t, mul(star(s), s)), s)

    idem = {s for s in ball if equal(mul(s, s), s)}
    for s in ball:
        ss = star(s)
        report.record("regular: s s* s = s", equal(mul(mul(s, ss), s), s), s)
        report.record("regular: s* s s* = s*", equal(mul(mul(ss, s), ss), ss), s)
        report.record("involution: s** = s", equal(star(ss), s), s)
        is_idem = s in idem
        report.record("phi idempotent pure", phi(s).is_identity == is_idem, s, phi(s))
        top = max_above(s)
        report.record("max: s <= s_alpha s_beta*", le(s, top), s, top)
    for e in idem:
        for f in idem:
            report.record("idempotents commute", equal(mul(e, f), mul(f, e)), e, f)
    for s in ball:
        top = max_above(s)
        sid = s in idem
        for t in ball:
            st = mul(s, t)
            report.record("involution: (st)* = t* s*", equal(star(st), mul(star(t), star(s))), s, t)
            if not st.is_zero:
                report.record("phi partial homomorphism", phi(st) == phi(s) * phi(t), s, t, st)
            if le(s, t):
                report.record("max: s <= t implies t <= max(s)", le(t, top), s, t, top)
                if sid:
                    report.record("E*-unitary", t in idem, s, t)
    if triples:
        for s in ball:
            for t in ball:
                st = mul(s, t)
                for u in ball:
                    report.record("associativity", equal(mul(st, u), mul(s, mul(t, u))), s, t, u)
    return report
