"""Command-line front end.

Usage: ``subshift-semigroup VERB SHIFT [ARGS] [--format table|json|dot]``
where ``SHIFT`` is a path to a ``.shift`` file or ``builtin:full``,
``builtin:golden`` or ``builtin:even``.

Exit status: 0 on success, 1 when ``audit`` or ``oracle-check`` finds a
violation, 2 on usage, parse or semantic errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import language as lang
from . import semigroup as sg
from . import spectrum as sp
from .errors import SubshiftError
from .literals import parse_edata, parse_element, parse_point_literal, parse_word_literal
from .oracle import check_products, point_sample
from .sets import (
    ConstraintSet,
    contains_point,
    format_edata,
    intersect,
    make_set,
    product_idem,
    set_equal,
    subset,
)
from .words import format_word


class UsageError(Exception):
    pass


def _ints(text: str, n: int, name: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"{name} expects {n} comma-separated integers") from None
    if len(vals) != n or any(v < 0 for v in vals):
        raise argparse.ArgumentTypeError(f"{name} expects {n} comma-separated nonnegative integers")
    return vals


def _triple(name):
    return lambda s: _ints(s, 3, name)


def _pair(name):
    return lambda s: _ints(s, 2, name)


def load_shift(ref: str) -> lang.SubshiftSpec:
    if ref.startswith("builtin:"):
        key = ref.split(":", 1)[1]
        if key not in lang.BUILTINS:
            raise UsageError(f"unknown builtin {key!r}; choose from {sorted(lang.BUILTINS)}")
        return lang.BUILTINS[key]()
    try:
        return lang.load_spec(ref)
    except OSError as exc:
        raise UsageError(f"cannot read {ref}: {exc.strerror}") from None


def _emit(args, payload, table: str, dot: str | None = None):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    elif args.format == "dot":
        if dot is None:
            raise UsageError(f"--format dot is not available for {args.verb}")
        print(dot)
    else:
        print(table)


def cmd_compile(args, m):
    info = lang.describe(m)
    info["realizable_profiles"] = [
        {"states": [m.labels[q] for q in sorted(p.states)], "witness": str(p.witness)}
        for p in lang.realizable_profiles(m)
    ]
    rows = [f"kind: {info['kind']}", f"states: {len(info['states'])}", f"start: {info['start']}"]
    rows += [f"  {p} --{a}--> {q}" for p, a, q in info["transitions"]]
    rows.append(f"realizable profiles: {len(info['realizable_profiles'])}")
    rows += [f"  {{{','.join(p['states'])}}} e.g. {p['witness']}" for p in info["realizable_profiles"]]
    dot = ["digraph model {", "  rankdir=LR;"]
    dot += [f'  "{m.labels[q]}";' for q in m.states]
    dot += [f'  "{p}" -> "{q}" [label="{a}"];' for p, a, q in info["transitions"]]
    dot.append("}")
    _emit(args, info, "\n".join(rows), "\n".join(dot))
    return 0


def cmd_factor(args, m):
    w = parse_word_literal(args.word, m.alphabet)
    ok = lang.is_factor(m, w)
    payload = {"word": format_word(w), "factor": ok}
    if ok:
        payload["end_state"] = m.labels[m.run(w)]
    _emit(args, payload, f"{format_word(w)}: {'factor' if ok else 'not a factor'}")
    return 0


def _set_info(m, e, sample):
    s = make_set(m, e.F, e.v)
    info = {"set": format_edata(e, m.symbols), "empty": s.empty}
    if not s.empty:
        kind = s.key[0]
        info["canonical"] = str(s.key[1]) if kind == "point" else f"{format_word(s.key[1])}+tail({len(s.key[2])} states)"
        p = sp.lemma_index(e)
        info["lemma_index"] = [p.k, p.l]
        info["sample_points"] = [str(x) for x in sample if contains_point(s, x)]
    return s, info


def cmd_set(args, m):
    sample = point_sample(m.spec, *args.points)
    e = parse_edata(args.edata, m.alphabet)
    s, info = _set_info(m, e, sample)
    lines = [f"{k}: {v}" for k, v in info.items()]
    payload = {"first": info}
    if args.other:
        f = parse_edata(args.other, m.alphabet)
        t, other = _set_info(m, f, sample)
        prod = product_idem(e, f)
        ps = make_set(m, prod.F, prod.v) if prod is not None else None
        rel = {
            "equal": set_equal(s, t),
            "subset": subset(s, t),
            "superset": subset(t, s),
            "product": "0" if ps is None or ps.empty else format_edata(prod, m.symbols),
            "product_matches_intersection": set_equal(intersect(s, t), ps) if ps is not None
            else intersect(s, t).empty,
        }
        payload.update({"second": other, "relation": rel})
        lines += [f"second {k}: {v}" for k, v in other.items()]
        lines += [f"{k}: {v}" for k, v in rel.items()]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_product(args, m):
    out = sg.multiply(parse_element(args.s, m), parse_element(args.t, m))
    _emit(args, {"product": str(out)}, str(out))
    return 0


def cmd_normalize(args, m):
    s = parse_element(args.s, m)
    payload = {"element": str(s), "zero": s.is_zero}
    if not s.is_zero:
        payload["source"] = format_edata(ConstraintSet(s.data.F | {s.alpha + s.data.v}, s.beta + s.data.v), m.symbols)
        payload["range"] = format_edata(ConstraintSet(s.data.F | {s.beta + s.data.v}, s.alpha + s.data.v), m.symbols)
        payload["idempotent"] = sg.is_idempotent(s)
    _emit(args, payload, "\n".join(f"{k}: {v}" for k, v in payload.items()))
    return 0


def cmd_equal(args, m):
    res = sg.equal(parse_element(args.s, m), parse_element(args.t, m))
    _emit(args, {"equal": res}, str(res).lower())
    return 0


def cmd_order(args, m):
    s, t = parse_element(args.s, m), parse_element(args.t, m)
    payload = {"s<=t": sg.leq(s, t), "t<=s": sg.leq(t, s)}
    _emit(args, payload, "\n".join(f"{k}: {str(v).lower()}" for k, v in payload.items()))
    return 0


def cmd_phi(args, m):
    w = sg.phi(parse_element(args.s, m))
    _emit(args, {"phi": str(w)}, str(w))
    return 0


def cmd_max(args, m):
    t = sg.max_above(parse_element(args.s, m))
    _emit(args, {"max": str(t)}, str(t))
    return 0


def cmd_apply(args, m):
    s = parse_element(args.s, m)
    x = parse_point_literal(args.point, m.alphabet)
    lang.profile_of(m, x)
    y = sg.apply(s, x)
    text = "undefined" if y is None else str(y)
    _emit(args, {"image": None if y is None else str(y)}, text)
    return 0


def cmd_ball(args, m):
    ball = sg.enumerate_ball(m, *args.ball)
    names = [str(s) for s in ball]
    _emit(args, {"size": len(names), "elements": names}, "\n".join(names + [f"size: {len(names)}"]))
    return 0


def cmd_audit(args, m):
    ball = sg.enumerate_ball(m, *args.ball)
    report = sg.audit(m, ball, triples=not args.no_triples)
    payload = {"ball": list(args.ball), "size": len(ball), **report.as_dict()}
    lines = [f"ball {args.ball}: {len(ball)} elements"]
    lines += [f"  {k}: {report.checked[k]} checked, {len(v)} violations" for k, v in sorted(report.violations.items())]
    lines.append(f"violations: {report.total_violations}")
    _emit(args, payload, "\n".join(lines))
    return 0 if report.ok else 1


def cmd_spectrum(args, m):
    if args.rect:
        indices = sp.rectangle(*args.rect)
    else:
        indices = [sp.IndexPair(*args.index)]
    spaces = [sp.level_space(m, p) for p in indices]
    payload = {
        "levels": [
            {"index": [s.index.k, s.index.l], "classes": sp.level_rows(m, s)} for s in spaces
        ]
    }
    _emit(args, payload, sp.level_table(m, spaces), sp.bonding_dot(m, indices))
    return 0


def cmd_decompose(args, m):
    e = parse_edata(args.edata, m.alphabet)
    p = sp.IndexPair(*args.index) if args.index else sp.lemma_index(e)
    classes = sp.decompose_set(m, e, p)
    payload = {"set": format_edata(e, m.symbols), "index": [p.k, p.l],
               "classes": sp.level_rows(m, sp.LevelSpace(p, tuple(classes)))}
    lines = [f"{format_edata(e, m.symbols)} at {p}: {len(classes)} classes"]
    lines += [f"  {c.label}  {c.witness}" for c in classes]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_ultrafilter(args, m):
    x = parse_point_literal(args.point, m.alphabet)
    universe = sp.idempotent_universe(m, *args.universe)
    eta = sp.ultrafilter_restrict(m, x, universe)
    tower = sp.tower_of(m, x, args.rect or (2, 4))
    theta = sp.theta_restrict(m, tower, universe)
    bad = {k: len(v) for k, v in sp.filter_violations(m, eta).items()}
    members = [format_edata(e, m.symbols) for e in eta.sorted_members()]
    payload = {"point": str(x), "universe": len(universe), "members": members,
               "theta_equals_eta": theta.members == eta.members, "filter_violations": bad,
               "extensions": len(sp.filter_extensions(m, eta))}
    lines = [f"{x}: {len(members)} of {len(universe)} idempotents"] + [f"  {e}" for e in members]
    lines.append(f"theta = eta: {str(theta.members == eta.members).lower()}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_oracle_check(args, m):
    ball = sg.enumerate_ball(m, *args.ball)
    sample = point_sample(m.spec, *args.points)
    report = check_products(m, ball, sample)
    payload = {"ball": list(args.ball), "points": list(args.points), "sample": len(sample), **report.as_dict()}
    lines = [f"ball {args.ball}: {len(ball)} elements, sample {len(sample)} points",
             f"pairs: {report.pairs_checked}", f"mismatches: {len(report.mismatches)}"]
    _emit(args, payload, "\n".join(lines))
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="subshift-semigroup", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("shift", help="path to a .shift file or builtin:full|golden|even")
    common.add_argument("--format", choices=("table", "json", "dot"), default="table")

    def verb(name, func, help_text, *positionals):
        p = sub.add_parser(name, parents=[common], help=help_text)
        for pos in positionals:
            p.add_argument(pos)
        p.set_defaults(func=func)
        return p

    verb("compile", cmd_compile, "compile the shift and describe the model")
    verb("factor", cmd_factor, "test whether a word is a factor", "word")
    p = verb("set", cmd_set, "canonicalize C(F;v), optionally compare with a second set", "edata")
    p.add_argument("other", nargs="?")
    p.add_argument("--points", type=_pair("--points"), default=(4, 4))
    verb("product", cmd_product, "multiply two elements", "s", "t")
    verb("normalize", cmd_normalize, "print an element in lowest terms", "s")
    verb("equal", cmd_equal, "compare two elements", "s", "t")
    verb("order", cmd_order, "natural partial order in both directions", "s", "t")
    verb("phi", cmd_phi, "free-group grading", "s")
    verb("max", cmd_max, "the element s[alpha] s*[beta] above s", "s")
    verb("apply", cmd_apply, "apply an element to a point u(w)", "s", "point")
    for name, func, text in (("ball", cmd_ball, "list a bounded ball of elements"),
                             ("audit", cmd_audit, "audit inverse-semigroup laws on a ball")):
        p = verb(name, func, text)
        p.add_argument("--ball", type=_triple("--ball"), default=(1, 1, 2), metavar="L,F,FL")
        if name == "audit":
            p.add_argument("--no-triples", action="store_true", help="skip associativity")
    p = verb("spectrum", cmd_spectrum, "level spaces and bonding maps")
    p.add_argument("--index", type=_pair("--index"), default=(1, 1), metavar="k,l")
    p.add_argument("--rect", type=_pair("--rect"), metavar="K,L", help="all indices with k<=K, l<=L")
    p = verb("decompose", cmd_decompose, "split C(F;v) into level classes", "edata")
    p.add_argument("--index", type=_pair("--index"), metavar="k,l")
    p = verb("ultrafilter", cmd_ultrafilter, "idempotents containing a point", "point")
    p.add_argument("--universe", type=_triple("--universe"), default=(2, 1, 2), metavar="V,F,FL")
    p.add_argument("--rect", type=_pair("--rect"), metavar="K,L")
    p = verb("oracle-check", cmd_oracle_check, "compare products with brute-force composition")
    p.add_argument("--ball", type=_triple("--ball"), default=(1, 1, 2), metavar="L,F,FL")
    p.add_argument("--points", type=_pair("--points"), default=(4, 4), metavar="T,P")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        m = lang.compile_shift(load_shift(args.shift))
        return args.func(args, m)
    except (UsageError, SubshiftError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
