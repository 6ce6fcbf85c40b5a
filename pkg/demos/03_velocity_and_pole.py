"""
Velocities, the rotation pole and the rolling pole curves
=========================================================

A homothetic motion maps the moving plane into the fixed plane through
x' = (h x - u) e^{j phi}.  At every instant one point of the moving plane has
zero sliding velocity: the rotation pole.  Its locus in the two planes gives
the moving and fixed pole curves, which roll on each other; with a varying
scale h they also slide, with arc rates in the exact ratio |h|.
"""

import math

from hypkin import (
    HypNumber, HypPath, HomotheticMotion, ScalarPath, ZERO,
    arc_rate_fixed, arc_rate_moving, map_point, pole_curves, pole_point,
    state, velocity_decompose,
)
from hypkin.cli import render_svg
from hypkin.paths import cosh_term, poly_term, sinh_term

# The reference motion: unit scale, angle t, and an origin path tuned so the
# pole curves are Lorentzian circles (radius 2 moving, radius 1 fixed).
m1 = HomotheticMotion(
    h=ScalarPath.constant(1.0),
    phi=ScalarPath.polynomial(0, 1),
    u=HypPath(
        ScalarPath((sinh_term(1, 1),)),
        ScalarPath((cosh_term(1, 1), poly_term(-1, 0))),
    ),
    interval=(-1.0, 1.0),
)

st = state(m1, 0.3)
x = HypNumber(0.5, -0.25)

# Velocity split of a point rigidly attached to the moving plane: the
# relative part vanishes and the absolute velocity equals the sliding one.
d = velocity_decompose(st, x, ZERO)
print("vr =", d.vr)
print("vf =", d.vf)
print("va =", d.va)

# The rotation pole is where the sliding velocity dies.
p = pole_point(st)
print("pole            =", p)
print("vf at the pole  =", velocity_decompose(st, p, ZERO).vf)

# Sample both pole curves.  For this motion they are
#   moving: 2 sinh t + j(2 cosh t - 1),   fixed: sinh 2t + j cosh 2t,
# and both arc rates equal 2, so the curves roll without sliding.
samples = pole_curves(m1, -1.0, 1.0, 9)
print("\n   t     moving pole            fixed pole             ds/dt  ds'/dt")
for s in samples:
    print(f"{s.t:5.2f}  ({s.p_moving.x:8.5f},{s.p_moving.y:8.5f})"
          f"  ({s.p_fixed.x:8.5f},{s.p_fixed.y:8.5f})"
          f"  {arc_rate_moving(s):.4f} {arc_rate_fixed(s):.4f}")

closed_moving = HypNumber(2 * math.sinh(0.5), 2 * math.cosh(0.5) - 1)
print("\nclosed form at t=0.5:", closed_moving, "vs sampled:", samples[6].p_moving)

# Sketch the two curves plus one trajectory; the dashed guides are the
# isotropic lines y = +/-x.
dense = pole_curves(m1, -1.0, 1.0, 101)
trajectory = [map_point(state(m1, -1.0 + 2.0 * i / 100), ZERO) for i in range(101)]
svg = render_svg([
    ("moving pole curve (P)", [(s.p_moving.x, s.p_moving.y) for s in dense]),
    ("fixed pole curve (P')", [(s.p_fixed.x, s.p_fixed.y) for s in dense]),
    ("trajectory of the origin", [(z.x, z.y) for z in trajectory]),
])
with open("pole_curves.svg", "wb") as fh:
    fh.write(svg)
print("\nwrote pole_curves.svg")
