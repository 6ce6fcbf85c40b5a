"""One-parameter homothetic motion of the hyperbolic plane.

A motion of the moving plane H against the fixed plane H' is the triple
(h(t), phi(t), u(t)): a scalar homothetic scale, a Lorentzian rotation angle
and the origin of the fixed system expressed in the moving system.  A point x
of the moving plane appears in the fixed plane as

    x' = (h x - u) e^{j phi}.

This module evaluates the classical instantaneous quantities of that motion:
the relative / sliding / absolute velocity split, the rotation pole (the
point whose sliding velocity vanishes), the moving and fixed pole curves with
their rolling law ds' = |h| ds, the acceleration split with its Coriolis
term, and the acceleration pole.

All state objects are immutable values and every function is pure.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import numdiff
from .hypernum import HypNumber, LightlikeError, exp_j, div, jmul, modulus_h
from .paths import HypPath, ScalarPath, eval_hyp_jet, eval_jet

PHID_FLOOR = 1e-12


class DegenerateError(ArithmeticError):
    """The motion stops rotating (phi' = 0): no instantaneous kinematics."""


class DegeneratePoleCurve(ArithmeticError):
    """The rotation pole is stationary: pole-curve quantities are undefined."""


@dataclass(frozen=True)
class HomotheticMotion:
    """The triple (h, phi, u) plus the time interval it is declared on."""

    h: ScalarPath
    phi: ScalarPath
    u: HypPath
    interval: tuple[float, float]

    def validate(self, samples: int = 101) -> None:
        """Check phi' != 0 on a uniform grid over the declared interval."""
        t0, t1 = self.interval
        for i in range(samples):
            t = t0 + (t1 - t0) * i / (samples - 1)
            if abs(eval_jet(self.phi, t).d1) < PHID_FLOOR:
                raise DegenerateError(f"angular velocity vanishes at t={t:g}")

    def is_homothetic(self, samples: int = 101) -> bool:
        """False when the scale h is constant over the interval (plain motion)."""
        t0, t1 = self.interval
        return any(
            abs(eval_jet(self.h, t0 + (t1 - t0) * i / (samples - 1)).d1) > 1e-15
            for i in range(samples)
        )


@dataclass(frozen=True)
class MotionState:
    """All jets of (h, phi, u) at one instant; input to every formula below.

    rot caches e^{j phi}.  The source motion rides along so that pole-curve
    derivatives (which need neighboring instants) can be formed from a state.
    """

    motion: HomotheticMotion
    t: float
    h: float
    hd: float
    hdd: float
    phi: float
    phid: float
    phidd: float
    u: HypNumber
    ud: HypNumber
    udd: HypNumber
    rot: HypNumber

    def twist(self) -> HypNumber:
        """The velocity coefficient h' + j h phi' that multiplies pole rays."""
        return HypNumber(self.hd, self.h * self.phid)


@dataclass(frozen=True)
class VelocityDecomposition:
    vr: HypNumber  # relative: seen from the moving plane
    vf: HypNumber  # sliding: imparted by the frame motion
    va: HypNumber  # absolute: seen from the fixed plane; va = vf + vr


@dataclass(frozen=True)
class AccelerationDecomposition:
    br: HypNumber  # relative
    bc: HypNumber  # Coriolis
    bf: HypNumber  # sliding
    ba: HypNumber  # absolute; ba = bf + bc + br


@dataclass(frozen=True)
class PoleSample:
    """One instant on the pole curves: positions and tangents in both planes."""

    t: float
    p_moving: HypNumber
    p_fixed: HypNumber
    pd_moving: HypNumber
    pd_fixed: HypNumber


def state(motion: HomotheticMotion, t: float) -> MotionState:
    """Evaluate all jets of the motion at t."""
    jh = eval_jet(motion.h, t)
    jphi = eval_jet(motion.phi, t)
    if abs(jphi.d1) < PHID_FLOOR:
        raise DegenerateError(f"angular velocity vanishes at t={t:g}")
    u, ud, udd = eval_hyp_jet(motion.u, t)
    return MotionState(
        motion=motion,
        t=t,
        h=jh.v,
        hd=jh.d1,
        hdd=jh.d2,
        phi=jphi.v,
        phid=jphi.d1,
        phidd=jphi.d2,
        u=u,
        ud=ud,
        udd=udd,
        rot=exp_j(jphi.v),
    )


def map_point(st: MotionState, x: HypNumber) -> HypNumber:
    """Image of the moving-plane point x in the fixed plane: (h x - u) e^{j phi}."""
    return (x * st.h - st.u) * st.rot


def velocity_decompose(st: MotionState, x: HypNumber, xd: HypNumber) -> VelocityDecomposition:
    """Split the velocity of a moving point into relative, sliding and absolute parts.

    x is the point's position on the moving plane and xd its velocity there
    (xd = 0 for a point rigidly attached to the moving plane).  The parts are

        vr = h x' e^{j phi}
        vf = [(h' + j h phi') x - (u' + j u phi')] e^{j phi}
        va = vf + vr

    va is evaluated from its own closed expression rather than by summing the
    parts, so the composition law is a checkable identity, not a tautology.
    """
    tw = st.twist()
    drag = st.ud + jmul(st.u) * st.phid
    vr = (xd * st.h) * st.rot
    vf = (tw * x - drag) * st.rot
    va = (tw * x - drag + xd * st.h) * st.rot
    return VelocityDecomposition(vr, vf, va)


def sliding_velocity_pole_form(st: MotionState, x: HypNumber) -> HypNumber:
    """Sliding velocity written through the pole: (h' + j h phi')(x - p) e^{j phi}.

    Algebraically equal to the vf of velocity_decompose whenever the pole
    exists; kept as a second route for consistency checks.
    """
    return (st.twist() * (x - pole_point(st))) * st.rot


def pole_point(st: MotionState) -> HypNumber:
    """Rotation pole p = (u' + j phi' u) / (h' + j h phi').

    The pole is the moving-plane point whose sliding velocity vanishes at this
    instant.  Raises LightlikeError when the denominator is isotropic
    (h'^2 = h^2 phi'^2), where no finite pole exists.
    """
    num = st.ud + jmul(st.u) * st.phid
    den = st.twist()
    if den.x * den.x == den.y * den.y:
        raise LightlikeError(
            f"pole denominator {den} isotropic at t={st.t:g} (h'^2 = h^2 phi'^2)"
        )
    return div(num, den)


def pole_velocity(st: MotionState) -> HypNumber:
    """Time derivative of the moving pole curve at this instant.

    Computed by Richardson-extrapolated central differences of pole_point
    along the motion; accurate to ~1e-11 for basis-built motions.
    """
    motion = st.motion
    return numdiff.d1(lambda s: pole_point(state(motion, s)), st.t)


def _fixed_pole(motion: HomotheticMotion, t: float) -> HypNumber:
    st = state(motion, t)
    return map_point(st, pole_point(st))


def pole_sample(motion: HomotheticMotion, t: float) -> PoleSample:
    """Positions and tangent vectors of both pole curves at one instant.

    The two tangents are differentiated independently, one on each curve, so
    the rolling identity p_fixed' = h p_moving' e^{j phi} remains a genuine
    cross-check.  Raises DegeneratePoleCurve when the pole is stationary.
    """
    st = state(motion, t)
    p = pole_point(st)
    pf = map_point(st, p)
    pd = pole_velocity(st)
    scale = 1.0 + max(abs(p.x), abs(p.y))
    if max(abs(pd.x), abs(pd.y)) <= 1e-12 * scale:
        raise DegeneratePoleCurve(f"stationary pole at t={t:g}: p={p}")
    pdf = numdiff.d1(lambda s: _fixed_pole(motion, s), t)
    return PoleSample(t, p, pf, pd, pdf)


def pole_curves(motion: HomotheticMotion, t0: float, t1: float, n: int) -> list[PoleSample]:
    """Sample both pole curves on n uniform instants of [t0, t1]."""
    if n < 2:
        raise ValueError("need at least two samples")
    return [pole_sample(motion, t0 + (t1 - t0) * i / (n - 1)) for i in range(n)]


def arc_rate_moving(sample: PoleSample) -> float:
    """ds/dt of the moving pole curve."""
    return modulus_h(sample.pd_moving)


def arc_rate_fixed(sample: PoleSample) -> float:
    """ds'/dt of the fixed pole curve; equals |h| times the moving rate."""
    return modulus_h(sample.pd_fixed)


def acceleration_decompose(
    st: MotionState, x: HypNumber, xd: HypNumber, xdd: HypNumber
) -> AccelerationDecomposition:
    """Split the acceleration of a moving point into its four classical parts.

        br = h x'' e^{j phi}
        bc = 2 x' (h' + j h phi') e^{j phi}
        bf = [(x - p)(h'' + h phi'^2 + j(2 h' phi' + h phi'')) - p'(h' + j h phi')] e^{j phi}
        ba = bf + bc + br

    As with the velocities, ba is evaluated as one closed expression so the
    composition theorem stays a real identity to check.  Needs the pole and
    its derivative; pole errors propagate.
    """
    tw = st.twist()
    quad = HypNumber(st.hdd + st.h * st.phid * st.phid, 2.0 * st.hd * st.phid + st.h * st.phidd)
    p = pole_point(st)
    pd = pole_velocity(st)
    br = (xdd * st.h) * st.rot
    bc = ((xd * tw) * 2.0) * st.rot
    bf = ((x - p) * quad - pd * tw) * st.rot
    ba = ((x - p) * quad - pd * tw + (xd * tw) * 2.0 + xdd * st.h) * st.rot
    return AccelerationDecomposition(br, bc, bf, ba)


def acceleration_pole(st: MotionState) -> HypNumber:
    """Acceleration pole q, where the sliding acceleration vanishes.

        q = p + p'(h' + j h phi') / (h'' + h phi'^2 + j(2 h' phi' + h phi''))

    Raises LightlikeError when the denominator is isotropic, i.e. when
    h'' + h phi'^2 = -/+ (2 h' phi' + h phi'').
    """
    quad = HypNumber(st.hdd + st.h * st.phid * st.phid, 2.0 * st.hd * st.phid + st.h * st.phidd)
    if quad.x * quad.x == quad.y * quad.y:
        raise LightlikeError(
            f"acceleration-pole denominator {quad} isotropic at t={st.t:g}"
        )
    p = pole_point(st)
    pd = pole_velocity(st)
    return p + div(pd * st.twist(), quad)
