from __future__ import annotations

import itertools

import pytest

from subshift_semigroup import compile_shift, even_shift, full_shift, golden_mean
from subshift_semigroup.oracle import brute_member, point_sample
from subshift_semigroup.words import Point

SHIFTS = {"full": full_shift, "golden": golden_mean, "even": even_shift}


@pytest.fixture(scope="session")
def models():
    return {name: compile_shift(make()) for name, make in SHIFTS.items()}


@pytest.fixture(scope="session")
def samples():
    return {name: point_sample(make(), 4, 4) for name, make in SHIFTS.items()}


@pytest.fixture(params=sorted(SHIFTS))
def shift_name(request):
    return request.param


def brute_pred(spec, x: Point, r: int) -> frozenset:
    """``P_r(x)`` by testing every word of length ``r`` with the brute membership test."""
    return frozenset(mu for mu in spec.alphabet.words(r) if brute_member(spec, x.prepend(mu)))


def brute_kl_key(spec, x: Point, k: int, l: int) -> tuple:
    tail = x.shift(k)
    return (x.prefix(k),) + tuple(brute_pred(spec, tail, r) for r in range(1, l + 1))


def brute_partition(spec, points, k: int, l: int) -> list[frozenset]:
    """Blocks of the (k, l) relation on ``points``, built pairwise from brute predecessor sets."""
    blocks: list[list] = []
    keys: list[tuple] = []
    for x in points:
        key = brute_kl_key(spec, x, k, l)
        for i, other in enumerate(keys):
            if other == key:
                blocks[i].append(x)
                break
        else:
            keys.append(key)
            blocks.append([x])
    return [frozenset(b) for b in blocks]


def brute_in_set(spec, F, v: str, x: Point) -> bool:
    """``x in C(F; v)`` straight from the definition."""
    if not x.startswith(v) or not brute_member(spec, x):
        return False
    tail = x.shift(len(v))
    return all(brute_member(spec, tail.prepend(f)) for f in F)


def small_edata(symbols: str, max_v: int, max_f: int, max_flen: int):
    words = [""] + ["".join(p) for n in range(1, max_flen + 1) for p in itertools.product(symbols, repeat=n)]
    vs = [w for w in words if len(w) <= max_v]
    for v in vs:
        for n in range(max_f + 1):
            for F in itertools.combinations(words, n):
                yield frozenset(F), v


# one line per acceptance criterion, repeated in the terminal summary
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
