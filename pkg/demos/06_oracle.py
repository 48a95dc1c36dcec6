"""Check multiplication against composition of maps on a finite point sample.

The sample is built from the forbidden words / graph directly, not from the
compiled automaton, so the two sides share no code below the element data.
"""
import time

from subshift_semigroup import (
    check_products,
    compile_shift,
    enumerate_ball,
    even_shift,
    full_shift,
    golden_mean,
    point_sample,
)

for spec in (full_shift(), golden_mean(), even_shift()):
    m = compile_shift(spec)
    ball = enumerate_ball(m, 1, 1, 2)
    sample = point_sample(spec, 4, 4)
    t0 = time.perf_counter()
    rep = check_products(m, ball, sample)
    dt = time.perf_counter() - t0
    print(f"{spec.name}: {len(ball)} elements, {len(sample)} points, "
          f"{rep.pairs_checked} pairs, {len(rep.mismatches)} mismatches ({dt:.1f}s)")
