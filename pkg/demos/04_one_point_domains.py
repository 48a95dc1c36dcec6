"""On the even shift some constraint sets are single points.

C({1, 10}; e) = {0^inf}: a point y with both 1y and 10y in the shift must
start with an even and an odd run of zeros at once, so y = 0^inf.  Two
consequences for the semigroup of partial bijections:

* different lowest-terms triples can name the same map;
* s_0 restricted to {0^inf} is an idempotent, so a non-idempotent (s_0)
  sits above a nonzero idempotent, and the grading alpha beta^-1 depends
  on the representative.
"""
from subshift_semigroup import (
    audit,
    compile_shift,
    enumerate_ball,
    equal,
    even_shift,
    generator,
    is_idempotent,
    leq,
    make_element,
    phi,
    point_sample,
    reference_map,
)
from subshift_semigroup.literals import parse_element

m = compile_shift(even_shift())
sample = point_sample(m.spec, 4, 4)

e = make_element(m, "", {"1", "10"}, "", "")
print("domain of", e, "is", e.domain.key)
s0 = generator(m, "0")
print("e idempotent:", is_idempotent(e), " e <= s0:", leq(e, s0), " s0 idempotent:", is_idempotent(s0))
t = make_element(m, "0", {"1", "10"}, "", "")
print(t, "equals e:", equal(t, e), " phi(t) =", phi(t), " phi(e) =", phi(e))

a = parse_element("s[] E{v=e; F=10} s*[1]", m)
b = parse_element("s[0] E{v=e; F=10} s*[1]", m)
for x in (a, b):
    ref = reference_map(m.spec, x.alpha, x.data.F, x.data.v, x.beta, sample)
    print(x, "->", {str(k): str(v) for k, v in ref.pairs.items()})

rep = audit(m, enumerate_ball(m, 1, 1, 2), triples=False)
for k, w in rep.violations.items():
    for wit in w:
        print(k, "|", " ; ".join(wit))
