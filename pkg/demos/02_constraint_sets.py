"""Sets C(F; v), their canonical forms, and the symbolic product of idempotents."""
from subshift_semigroup import compile_shift, golden_mean, intersect, make_set, product_idem, set_equal
from subshift_semigroup.sets import ConstraintSet, format_edata

m = compile_shift(golden_mean())

# forbidding 11 makes "1 may follow" the same as "starts with 0"
a, b = make_set(m, {"1"}, ""), make_set(m, (), "0")
print("C({1}; e) == C(; 0):", set_equal(a, b), a.key == b.key)

e, f = ConstraintSet.of({"0"}, ""), ConstraintSet.of((), "1")
ef = product_idem(e, f)
print(format_edata(e), "*", format_edata(f), "=", format_edata(ef))
auto = intersect(make_set(m, e.F, e.v), make_set(m, f.F, f.v))
print("matches automaton intersection:", set_equal(make_set(m, ef.F, ef.v), auto))

print("C({11}; e) is empty:", make_set(m, {"11"}, "").empty)
