"""Multiply elements s_a E(F; v) s_b*, take inverses, grade them, and audit a ball."""
from subshift_semigroup import (
    audit,
    compile_shift,
    enumerate_ball,
    full_shift,
    generator,
    golden_mean,
    max_above,
    multiply,
    phi,
    star,
)
from subshift_semigroup.literals import parse_element

f = compile_shift(full_shift())
s = parse_element("s[0] E{v=e; F=} s*[1]", f)
t = parse_element("s[1] E{v=e; F=} s*[0]", f)
print(s, "*", t, "=", multiply(s, t))

g = compile_shift(golden_mean())
s0, s1 = generator(g, "0"), generator(g, "1")
print("s1* s0 =", multiply(star(s1), s0))
print("s1 s1 =", multiply(s1, s1))
u = multiply(s0, star(s1))
print(u, "phi =", phi(u), "max above =", max_above(u))

ball = enumerate_ball(g, 1, 1, 2)
rep = audit(g, ball)
print(f"golden ball (1,1,2): {len(ball)} elements, {rep.total_violations} violations")
