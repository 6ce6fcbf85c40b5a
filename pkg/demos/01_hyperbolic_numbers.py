"""
Hyperbolic (split-complex) numbers
==================================

The plane coordinatized by z = x + jy with j*j = +1.  Multiplication mixes
the components symmetrically, the induced "norm" sqrt(|x^2 - y^2|) vanishes
on the diagonals y = +/-x, and the unit circle is a four-branched hyperbola.
"""

import math

from hypkin import (
    Branch, HypNumber, J, classify, div, exp_j, inner, jmul, modulus_h, mul, polar,
)

# Basic ring arithmetic.  Note (1+j)(1-j) = 1 - j^2 = 0: the diagonals are
# made of zero divisors, which is where all the Lorentzian behavior comes from.
z = HypNumber(2, 1)
w = HypNumber(3, 2)
print("z * w              =", mul(z, w))
print("(1+j)(1-j)         =", mul(HypNumber(1, 1), HypNumber(1, -1)))
print("(8+7j)/(3+2j)      =", div(HypNumber(8, 7), w))

# The inner product has signature (1,1); multiplying by j gives an orthogonal
# vector, exactly like multiplying by i in the Euclidean plane.
print("<z, w>             =", inner(z, w))
print("<z, jz>            =", inner(z, jmul(z)))

# Moduli multiply, and rotations e^{j phi} preserve them.
print("|z| |w|            =", modulus_h(z) * modulus_h(w))
print("|z w|              =", modulus_h(mul(z, w)))
rot = exp_j(0.8)
print("|z e^{0.8j}|       =", modulus_h(mul(z, rot)))

# Every non-lightlike number lives on one of four branches and has a polar
# form: +/- r e^{j phi} on the left/right branches, +/- r j e^{j phi} above
# and below.  The angle phi is a boost rapidity, not a Euclidean angle.
for point in (z, HypNumber(1, 2), HypNumber(-2, 1), HypNumber(1, -2), HypNumber(1, 1)):
    branch = classify(point)
    if branch is Branch.LIGHTLIKE:
        print(f"{str(point):8s} -> {branch.value} (no polar form)")
    else:
        pf = polar(point)
        print(f"{str(point):8s} -> {branch.value}  r={pf.r:.6f}  phi={pf.phi:.6f}")

# Rotations act like hyperbolic rotation matrices [[cosh, sinh], [sinh, cosh]]
# and never move a point off its branch.
phi = 1.0
print("e^{j} * 1          =", mul(HypNumber(1, 0), exp_j(phi)), "= (cosh 1, sinh 1) =",
      (math.cosh(phi), math.sinh(phi)))
print("branch of j e^{j}  =", classify(mul(J, exp_j(phi))).value)
