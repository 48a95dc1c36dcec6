"""Compile three subshifts and look at what the automaton knows about points.

Run: python demos/01_languages.py
"""
from subshift_semigroup import (
    NotInLanguageError,
    compile_shift,
    even_shift,
    factors,
    full_shift,
    golden_mean,
    pred_set,
    profile_of,
    realizable_profiles,
)
from subshift_semigroup.words import Point

for spec in (full_shift(), golden_mean(), even_shift()):
    m = compile_shift(spec)
    print(m)
    print("  factors of length 4:", len(factors(m, 4)))
    # a profile is the set of states that accept the point; there are finitely many
    print("  realizable profiles:", len(realizable_profiles(m)))
    for x in (Point.of("", "0"), Point.of("1", "0"), Point.of("", "01")):
        try:
            print(f"  {x}: profile {sorted(profile_of(m, x))}, P_2 = {sorted(pred_set(m, x, 2))}")
        except NotInLanguageError as exc:
            print(f"  {x}: {exc}")
