"""Acceptance criteria, each run at its stated bounds.

Every test records one PASS/FAIL line (printed and repeated in the pytest
terminal summary) before asserting.
"""
from __future__ import annotations

import itertools
import random
import time

import pytest

from subshift_semigroup import (
    audit,
    check_products,
    class_of,
    compile_shift,
    decompose_set,
    enumerate_ball,
    enumerate_points,
    equal,
    generator,
    idempotent_universe,
    intersect,
    kl_equiv,
    level_space,
    make_element,
    make_set,
    multiply,
    point_sample,
    product_idem,
    set_extension,
    star,
    theta_restrict,
    tower_of,
    ultrafilter_restrict,
    zero,
)
from subshift_semigroup.sets import ConstraintSet
from subshift_semigroup.spectrum import bonding, index_leq, rectangle

from conftest import ACCEPTANCE, SHIFTS, brute_in_set, brute_partition

pytestmark = pytest.mark.acceptance

BALL = (1, 1, 2)


def report(n: int, ok: bool, detail: str):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"
    print(line)
    ACCEPTANCE.append(line)
    assert ok, line


@pytest.fixture(scope="module")
def acc_models():
    return {name: compile_shift(make()) for name, make in SHIFTS.items()}


@pytest.fixture(scope="module")
def acc_balls(acc_models):
    return {name: enumerate_ball(m, *BALL) for name, m in acc_models.items()}


@pytest.fixture(scope="module")
def audits(acc_models, acc_balls):
    return {name: audit(m, acc_balls[name]) for name, m in acc_models.items()}


def _violations(rep, keys):
    return sum(len(rep.violations.get(k, [])) for k in keys)


def test_criterion_1_oracle_equivalence(acc_models, acc_balls):
    start = time.perf_counter()
    pairs = mismatches = 0
    for name, m in acc_models.items():
        rep = check_products(m, acc_balls[name], point_sample(m.spec, 4, 4))
        pairs += rep.pairs_checked
        mismatches += len(rep.mismatches)
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and pairs > 1000 and elapsed < 60
    report(1, ok, f"{pairs} pairs, {mismatches} mismatches, {elapsed:.1f}s")


def test_criterion_2_inverse_semigroup_axioms(audits, acc_balls):
    keys = ["regular: s s* s = s", "regular: s* s s* = s*", "idempotents commute", "associativity"]
    bad = {name: _violations(rep, keys) for name, rep in audits.items()}
    full_cube = all(rep.checked["associativity"] == len(acc_balls[n]) ** 3 for n, rep in audits.items())
    report(2, full_cube and not any(bad.values()), f"violations {bad}")


def test_criterion_3_e_star_unitary(audits):
    bad = {name: _violations(rep, ["E*-unitary"]) for name, rep in audits.items()}
    checked = {name: rep.checked.get("E*-unitary", 0) for name, rep in audits.items()}
    report(3, not any(bad.values()), f"violations {bad}, checked {checked}")


def test_criterion_4_phi(audits):
    keys = ["phi partial homomorphism", "phi idempotent pure"]
    bad = {name: _violations(rep, keys) for name, rep in audits.items()}
    report(4, not any(bad.values()), f"violations {bad}")


def test_criterion_5_maximal_elements(audits):
    keys = ["max: s <= s_alpha s_beta*", "max: s <= t implies t <= max(s)"]
    bad = {name: _violations(rep, keys) for name, rep in audits.items()}
    report(5, not any(bad.values()), f"violations {bad}")


def _edata_family():
    words3 = [""] + ["".join(p) for n in range(1, 4) for p in itertools.product("01", repeat=n)]
    vs = [w for w in words3 if len(w) <= 2]
    return [ConstraintSet(frozenset(F), v) for v in vs for n in range(3) for F in itertools.combinations(words3, n)]


def test_criterion_6_idempotent_products(acc_models):
    data = _edata_family()
    total = bad = 0
    for m in acc_models.values():
        sets = {e: make_set(m, e.F, e.v) for e in data}
        canon: dict = {}
        inter: dict = {}
        for a, b in itertools.product(data, repeat=2):
            p = product_idem(a, b)
            if p is None:
                sym = ("empty",)
            else:
                sym = canon.get(p)
                if sym is None:
                    sym = canon[p] = make_set(m, p.F, p.v).key
            pair = (sets[a].key, sets[b].key)
            auto = inter.get(pair)
            if auto is None:
                auto = inter[pair] = intersect(sets[a], sets[b]).key
            total += 1
            bad += sym != auto
    report(6, bad == 0 and len(data) == 847, f"{total} pairs over {len(data)} idempotents, {bad} disagreements")


GOLDEN_COUNTS = {(1, 1): 3, (1, 2): 3, (2, 2): 5, (2, 3): 5, (3, 3): 8}


def test_criterion_7_level_spaces(acc_models):
    m = acc_models["golden"]
    pts = enumerate_points(m, 4, 4)
    counts, pairwise, brute = {}, {}, {}
    for p in GOLDEN_COUNTS:
        counts[p] = len(level_space(m, p))
        blocks: list[list] = []
        for x in pts:
            for b in blocks:
                if kl_equiv(m, x, b[0], p):
                    b.append(x)
                    break
            else:
                blocks.append([x])
        pairwise[p] = len(blocks)
        brute[p] = len(brute_partition(m.spec, pts, *p))
    coherent = True
    idx = rectangle(3, 3)
    for p, q, r in itertools.product(idx, repeat=3):
        if index_leq(p, q) and index_leq(q, r):
            for c in level_space(m, r):
                coherent &= bonding(m, bonding(m, c, q), p) == bonding(m, c, p)
    ok = counts == GOLDEN_COUNTS == pairwise == brute and coherent
    report(7, ok, f"counts {list(counts.values())}, pairwise {list(pairwise.values())}, bonding coherent {coherent}")


def test_criterion_8_decomposition(acc_models):
    checked = bad = 0
    for name in ("golden", "even"):
        m = acc_models[name]
        sample = point_sample(m.spec, 4, 4)
        for w in m.alphabet.words_upto(2):
            for v in m.alphabet.words_upto(2):
                s = make_set(m, {w}, v)
                parts = decompose_set(m, s)
                owners: dict = {}
                for x in sample:
                    hits = [c for c in parts if class_of(m, x, c.index) == c]
                    if hits:
                        owners[x] = hits
                disjoint = all(len(h) == 1 for h in owners.values())
                union = frozenset(owners)
                want = set_extension(m, s, sample)
                brute = frozenset(x for x in sample if brute_in_set(m.spec, {w}, v, x))
                checked += 1
                bad += not (disjoint and union == want == brute)
    report(8, bad == 0, f"{checked} sets, {bad} failures")


def test_criterion_9_theta_eta(acc_models):
    agree = compared = separated = pairs = 0
    for name, m in acc_models.items():
        pts = list(point_sample(m.spec, 4, 4))
        chosen = random.Random(20).sample(pts, 20)
        U = idempotent_universe(m, 2, 1, 2)
        thetas = {}
        for x in chosen:
            t = tower_of(m, x, (2, 4))
            th = theta_restrict(m, t, U)
            compared += 1
            agree += th == ultrafilter_restrict(m, x, U)
            thetas[x] = (t.signature((2, 2)), th.members)
        for x, y in itertools.combinations(chosen, 2):
            if thetas[x][0] != thetas[y][0]:
                pairs += 1
                separated += thetas[x][1] != thetas[y][1]
    ok = agree == compared and separated == pairs
    report(9, ok, f"theta = eta on {agree}/{compared} points, separated {separated}/{pairs} pairs")


def test_criterion_10_full_shift_collapse(acc_models, acc_balls):
    m = acc_models["full"]
    collapse = all(equal(s, make_element(m, s.alpha + s.data.v, (), "", s.beta + s.data.v))
                   for s in acc_balls["full"])

    def s_word(w):
        out = make_element(m)
        for a in w:
            out = multiply(out, generator(m, a))
        return out

    rule = True
    words = list(m.alphabet.words_upto(3))
    for mu, nu in itertools.product(words, repeat=2):
        got = multiply(star(s_word(mu)), s_word(nu))
        if nu.startswith(mu):
            want = s_word(nu[len(mu):])
        elif mu.startswith(nu):
            want = star(s_word(mu[len(nu):]))
        else:
            want = zero(m)
        rule &= equal(got, want)
    report(10, collapse and rule, f"collapse {collapse}, polycyclic rule {rule} on words up to 3")
