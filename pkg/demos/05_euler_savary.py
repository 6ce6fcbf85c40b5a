"""
Canonical invariants and the Euler-Savary relation
==================================================

At each instant the pole curves touch at the pole and share a tangent.
Measured in the frame carried by that tangent, the motion reduces to a few
rates: arc rate sigma, tangent turning rates tau and tau', curvature radii
r = sigma/tau and r' = sigma'/tau'.  The Euler-Savary relation

    (1/a - 1/a') e^{-j alpha} = h (1/r' - 1/r)

links the pole distance a of a moving point to the pole distance a' of the
curvature center of its trajectory.  The normal-intersection oracle provides
the ground truth the relation is checked against.
"""

from hypkin import (
    HypNumber, HypPath, HomotheticMotion, ScalarPath, ZERO,
    arc_rate_moving, canonical_invariants, conjugate_point, ConjugateInput,
    curvature_center_oracle, euler_savary_residual, jmul, modulus_h,
    pole_sample, predicted_curvature_center,
)
from hypkin.paths import cosh_term, poly_term, sinh_term

m1 = HomotheticMotion(
    h=ScalarPath.constant(1.0),
    phi=ScalarPath.polynomial(0, 1),
    u=HypPath(
        ScalarPath((sinh_term(1, 1),)),
        ScalarPath((cosh_term(1, 1), poly_term(-1, 0))),
    ),
    interval=(-1.0, 1.0),
)

# The invariants of this motion are constant: r = 2, r' = 1, dnu/ds = 1/2.
inv = canonical_invariants(m1, 0.0)
print(f"sigma = {inv.sigma_rate:.9f}  tau = {inv.tau_rate:.9f}  tau' = {inv.taup_rate:.9f}")
print(f"r  = {inv.r:.9f}")
print(f"r' = {inv.rp:.9f}")
print(f"dnu/ds = {inv.dnu_ds:.9f}")

# Conjugate points on the pole normal: 1/a - 1/a' = h dnu/ds, so a = 1 maps
# to a' = 2 and a = 2 is the inflection configuration (a' at infinity).
for a in (1.0, -1.0, 0.5, -3.0):
    out = conjugate_point(
        ConjugateInput(x=HypNumber(0, a), h=1.0, sigma=inv.sigma_rate,
                       dnu=inv.sigma_rate * inv.dnu_ds)
    )
    res = euler_savary_residual(a, out.y, 0.0, 1.0, inv.r, inv.rp)
    print(f"a = {a:5.2f} -> a' = {out.y:9.5f}   residual |.| = {modulus_h(res):.2e}")

# Arbitration: the prediction must match the limit of intersecting
# neighboring trajectory normals.  Take fixed points on the pole normal.
print("\npoint on pole normal   predicted center      oracle center")
s = pole_sample(m1, 0.0)
dm = s.pd_moving * (1.0 / arc_rate_moving(s))
for a in (-1.0, 1.0, -2.0):
    x = s.p_moving + jmul(dm) * a
    predicted = predicted_curvature_center(m1, 0.0, x)
    observed = curvature_center_oracle(m1, x, 0.0, 1e-4)
    print(f"a = {a:5.2f}           ({predicted.x: .6f},{predicted.y: .6f})"
          f"   ({observed.x: .6f},{observed.y: .6f})")

# The trajectory of the moving origin, for instance, curves about j/3.
print("\ncenter for the origin:", predicted_curvature_center(m1, 0.0, ZERO))
