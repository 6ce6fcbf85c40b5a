"""Hyperbolic number algebra against independent oracles.

The multiplication oracle is the 2x2 matrix representation
x + jy  <->  [[x, y], [y, x]]; ring product must match matrix product.
"""

import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hypkin import (
    Branch,
    HypNumber,
    J,
    LightlikeError,
    ONE,
    PolarForm,
    classify,
    conj,
    div,
    exp_j,
    inner,
    jmul,
    modulus_h,
    mul,
    polar,
    reconstruct,
)

finite = st.floats(min_value=-50.0, max_value=50.0, allow_nan=False)
numbers = st.builds(HypNumber, finite, finite)


def matrix_mul_oracle(z, w):
    # [[x, y], [y, x]] @ [[u, v], [v, u]] read back off the first column
    m = [[z.x, z.y], [z.y, z.x]]
    n = [[w.x, w.y], [w.y, w.x]]
    prod = [
        [m[0][0] * n[0][0] + m[0][1] * n[1][0], m[0][0] * n[0][1] + m[0][1] * n[1][1]],
        [m[1][0] * n[0][0] + m[1][1] * n[1][0], m[1][0] * n[0][1] + m[1][1] * n[1][1]],
    ]
    return HypNumber(prod[0][0], prod[1][0])


def test_mul_isotropic_pair_annihilates():
    assert mul(HypNumber(1, 1), HypNumber(1, -1)) == HypNumber(0, 0)


def test_mul_matches_matrix_oracle():
    assert mul(HypNumber(2, 1), HypNumber(3, 2)) == HypNumber(8, 7)
    rng = random.Random(1)
    for _ in range(200):
        z = HypNumber(rng.uniform(-9, 9), rng.uniform(-9, 9))
        w = HypNumber(rng.uniform(-9, 9), rng.uniform(-9, 9))
        assert mul(z, w) == matrix_mul_oracle(z, w)


def test_mul_identity():
    rng = random.Random(2)
    for _ in range(50):
        z = HypNumber(rng.uniform(-9, 9), rng.uniform(-9, 9))
        assert mul(z, ONE) == z


@given(numbers, numbers)
def test_mul_commutes(z, w):
    assert mul(z, w) == mul(w, z)


@given(numbers, numbers, numbers)
def test_mul_distributes(z, w, v):
    left = mul(z, w + v)
    right = mul(z, w) + mul(z, v)
    assert abs(left.x - right.x) <= 1e-9 * (1 + abs(left.x))
    assert abs(left.y - right.y) <= 1e-9 * (1 + abs(left.y))


def test_conj_definition():
    assert conj(HypNumber(2, 3)) == HypNumber(2, -3)
    assert conj(HypNumber(5, 0)) == HypNumber(5, 0)


@given(numbers)
def test_conj_involution(z):
    assert conj(conj(z)) == z


def test_conj_multiplicative():
    rng = random.Random(3)
    for _ in range(50):
        z = HypNumber(rng.uniform(-9, 9), rng.uniform(-9, 9))
        w = HypNumber(rng.uniform(-9, 9), rng.uniform(-9, 9))
        assert conj(mul(z, w)) == mul(conj(z), conj(w))


@given(numbers)
def test_conj_product_is_real(z):
    zz = mul(z, conj(z))
    assert zz.y == 0.0
    assert zz.x == z.x * z.x - z.y * z.y


def test_inner_examples():
    assert inner(HypNumber(2, 1), HypNumber(3, 2)) == 4.0
    assert inner(HypNumber(1, 1), HypNumber(1, 1)) == 0.0


def test_inner_j_orthogonality():
    rng = random.Random(4)
    for _ in range(50):
        z = HypNumber(rng.uniform(-9, 9), rng.uniform(-9, 9))
        assert abs(inner(z, jmul(z))) <= 1e-12


@given(numbers, numbers, st.floats(min_value=-5, max_value=5, allow_nan=False))
def test_inner_rotation_invariance(z, w, phi):
    rot = exp_j(phi)
    before = inner(z, w)
    after = inner(mul(z, rot), mul(w, rot))
    assert abs(after - before) <= 1e-10 * (1 + abs(before)) * math.cosh(2 * phi)


def test_modulus_examples():
    assert abs(modulus_h(HypNumber(3, 4)) - math.sqrt(7)) < 1e-15
    assert modulus_h(HypNumber(5, 3)) == 4.0
    assert modulus_h(HypNumber(1, 1)) == 0.0


@given(numbers, numbers)
def test_modulus_multiplicative(z, w):
    lhs = modulus_h(mul(z, w))
    rhs = modulus_h(z) * modulus_h(w)
    assert abs(lhs - rhs) <= 1e-10 * (1 + rhs)


def test_classify_examples():
    assert classify(HypNumber(2, 1)) is Branch.HI
    assert classify(HypNumber(1, 2)) is Branch.HII
    assert classify(HypNumber(-1, 1)) is Branch.LIGHTLIKE
    assert classify(HypNumber(-2, 1)) is Branch.HIII
    assert classify(HypNumber(1, -2)) is Branch.HIV
    assert classify(HypNumber(0, 0)) is Branch.LIGHTLIKE


def test_polar_axis_points():
    pf = polar(HypNumber(2, 0))
    assert (pf.r, pf.phi, pf.branch) == (2.0, 0.0, Branch.HI)
    pf = polar(HypNumber(0, 2))
    assert (pf.r, pf.phi, pf.branch) == (2.0, 0.0, Branch.HII)


def test_polar_left_branch():
    # -3 (cosh 1 + j sinh 1), evaluated numerically
    z = HypNumber(-3 * math.cosh(1), -3 * math.sinh(1))
    pf = polar(z)
    assert pf.branch is Branch.HIII
    assert abs(pf.r - 3) < 1e-12
    assert abs(pf.phi - 1) < 1e-12


def test_polar_rejects_lightlike():
    with pytest.raises(LightlikeError):
        polar(HypNumber(1, 1))
    with pytest.raises(LightlikeError):
        polar(HypNumber(0, 0))


def test_polar_round_trip():
    rng = random.Random(5)
    branches = [Branch.HI, Branch.HII, Branch.HIII, Branch.HIV]
    for _ in range(1000):
        r = 10.0 ** rng.uniform(-6, 6)
        phi = rng.uniform(-3, 3)
        branch = rng.choice(branches)
        z = reconstruct(PolarForm(r, phi, branch))
        back = reconstruct(polar(z))
        scale = max(abs(z.x), abs(z.y))
        assert abs(back.x - z.x) <= 1e-12 * scale
        assert abs(back.y - z.y) <= 1e-12 * scale
        assert polar(z).branch is branch


def test_exp_j_values():
    assert exp_j(0) == ONE
    e1 = exp_j(1)
    assert abs(e1.x - 1.5430806348152437) < 1e-15
    assert abs(e1.y - 1.1752011936438014) < 1e-15


def test_exp_j_unit_modulus():
    rng = random.Random(6)
    for _ in range(50):
        phi = rng.uniform(-5, 5)
        assert abs(modulus_h(exp_j(phi)) - 1) <= 1e-10


def test_exp_j_addition_law():
    rng = random.Random(7)
    for _ in range(50):
        a, b = rng.uniform(-3, 3), rng.uniform(-3, 3)
        lhs = mul(exp_j(a), exp_j(b))
        rhs = exp_j(a + b)
        scale = max(abs(rhs.x), abs(rhs.y))
        assert abs(lhs.x - rhs.x) <= 1e-12 * scale
        assert abs(lhs.y - rhs.y) <= 1e-12 * scale


def test_exp_j_matches_rotation_matrix():
    rng = random.Random(8)
    for _ in range(50):
        phi = rng.uniform(-3, 3)
        z = HypNumber(rng.uniform(-9, 9), rng.uniform(-9, 9))
        c, s = math.cosh(phi), math.sinh(phi)
        expected = HypNumber(c * z.x + s * z.y, s * z.x + c * z.y)
        got = mul(z, exp_j(phi))
        assert abs(got.x - expected.x) <= 1e-12 * (1 + abs(expected.x))
        assert abs(got.y - expected.y) <= 1e-12 * (1 + abs(expected.y))


def test_rotation_preserves_branches():
    rng = random.Random(9)
    for _ in range(200):
        z = HypNumber(rng.uniform(-9, 9), rng.uniform(-9, 9))
        if classify(z) is Branch.LIGHTLIKE:
            continue
        phi = rng.uniform(-3, 3)
        assert classify(mul(z, exp_j(phi))) is classify(z)


def test_div_inverts_mul():
    assert div(HypNumber(8, 7), HypNumber(3, 2)) == HypNumber(2, 1)
    rng = random.Random(10)
    for _ in range(200):
        z = HypNumber(rng.uniform(-9, 9), rng.uniform(-9, 9))
        w = HypNumber(rng.uniform(-9, 9), rng.uniform(-9, 9))
        if abs(w.x) == abs(w.y):
            continue
        back = mul(div(z, w), w)
        scale = 1 + max(abs(z.x), abs(z.y))
        assert abs(back.x - z.x) <= 1e-12 * scale
        assert abs(back.y - z.y) <= 1e-12 * scale


def test_div_identity_divisor():
    rng = random.Random(11)
    for _ in range(20):
        z = HypNumber(rng.uniform(-9, 9), rng.uniform(-9, 9))
        assert div(z, ONE) == z


def test_div_rejects_zero_divisors():
    with pytest.raises(LightlikeError):
        div(ONE, HypNumber(1, 1))
    with pytest.raises(LightlikeError):
        div(ONE, HypNumber(0, 0))


def test_rejects_non_finite_components():
    with pytest.raises(ValueError):
        HypNumber(math.nan, 0)
    with pytest.raises(ValueError):
        HypNumber(0, math.inf)


def test_text_rendering():
    assert str(HypNumber(2, 3)) == "2+3j"
    assert str(HypNumber(2, -3)) == "2-3j"
    assert str(HypNumber(-0.0, 1 / 3)) == "0+0.33333333333333331j"
    assert str(J) == "0+1j"
