"""Finite levels of the spectrum: classes, bonding maps, and points as filters."""
from subshift_semigroup import (
    class_of,
    compile_shift,
    decompose_set,
    golden_mean,
    idempotent_universe,
    level_space,
    make_set,
    theta_restrict,
    tower_of,
    ultrafilter_restrict,
)
from subshift_semigroup.sets import format_edata
from subshift_semigroup.spectrum import bonding_dot, level_table, rectangle
from subshift_semigroup.words import Point

m = compile_shift(golden_mean())
print(level_table(m, [level_space(m, p) for p in [(1, 1), (2, 2)]]))

s = make_set(m, {"1"}, "")
print("C({1}; e) decomposes into", [str(c) for c in decompose_set(m, s, (1, 2))])

x = Point.of("", "0")
U = idempotent_universe(m, 2, 1, 2)
eta = ultrafilter_restrict(m, x, U)
theta = theta_restrict(m, tower_of(m, x, (2, 4)), U)
print(f"{x}: {len(eta)} of {len(U)} idempotents contain it; theta = eta: {theta == eta}")
print("  ", ", ".join(format_edata(e) for e in eta.sorted_members()))
print("class of", x, "at (2,3):", class_of(m, x, (2, 3)))
print(bonding_dot(m, rectangle(1, 2)))
