"""
Accelerations, the Coriolis term and the acceleration pole
==========================================================

The absolute acceleration of a moving point splits into relative, Coriolis
and sliding parts.  The sliding part vanishes at exactly one point, the
acceleration pole, which in general differs from the rotation pole.
"""

from hypkin import (
    HypNumber, HypPath, HomotheticMotion, ScalarPath, ZERO,
    acceleration_decompose, acceleration_pole, map_point, pole_point, state,
)

# A genuinely homothetic motion: the scale drifts as h = 2 + t.
motion = HomotheticMotion(
    h=ScalarPath.polynomial(2, 1),
    phi=ScalarPath.polynomial(0, 1),
    u=HypPath(ScalarPath.polynomial(0, 1), ScalarPath.polynomial(0, 0, 0.5)),
    interval=(-0.5, 0.8),
)
st = state(motion, 0.25)
x = HypNumber(1.0, 0.5)
xd = HypNumber(0.2, -0.1)   # the point also drifts across the moving plane

d = acceleration_decompose(st, x, xd, ZERO)
print("relative  br =", d.br)
print("coriolis  bc =", d.bc)
print("sliding   bf =", d.bf)
print("absolute  ba =", d.ba)
print("ba - (bf+bc+br) =", d.ba - (d.bf + d.bc + d.br))

# For a point held fixed on the moving plane the Coriolis term dies and the
# absolute acceleration can be checked against a second difference of the
# trajectory itself.
d0 = acceleration_decompose(st, x, ZERO, ZERO)
eps = 1e-4
f = lambda s: map_point(state(motion, s), x)
fd = (f(0.25 + eps) - f(0.25) * 2.0 + f(0.25 - eps)) * (1.0 / eps**2)
print("\nfixed point: bc =", d0.bc)
print("ba            =", d0.ba)
print("2nd difference=", fd)

# The acceleration pole: sliding acceleration is zero there, and nowhere else.
q = acceleration_pole(st)
p = pole_point(st)
print("\nrotation pole     =", p)
print("acceleration pole =", q)
print("bf at q           =", acceleration_decompose(st, q, ZERO, ZERO).bf)
print("bf at p           =", acceleration_decompose(st, p, ZERO, ZERO).bf)
