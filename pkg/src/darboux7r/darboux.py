"""The general Darboux motion and its four factorizations into rotations.

The motion sends a moving point (x, y, z) to

    X = x cos(phi) - y sin(phi)
    Y = x sin(phi) + y cos(phi) + a sin(phi)
    Z = z + b sin(phi) + c (1 - cos(phi))

with shape parameters a != 0, b, c: every point traces an ellipse in a
plane, the planes of different points need not be parallel.  With the
tangent half-angle substitution t = tan(phi/2) the motion is a cubic
motion polynomial C; a constant frame change k + c*eps turns C into the
polynomial C0 whose action reproduces the equations above directly.

C admits one factorization into three rotation factors (FI) and, after
multiplying by the cofactor t^2 + 1, two essentially different families
of four-factor decompositions with a doubled factor (FII with the
doubled factor in the middle, FIII with a two-parameter family of
doubled last factors).  FIV is the anchor instance of FIII at
(a, b, c, x, y) = (1, 2, 0, 0, 0).  Combining two factorizations of the
same motion yields closed 7R linkages (see linkage.py).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

from . import conics
from .dualquat import (
    DQ_ONE,
    DualQuaternion,
    Q_K,
    Q_ZERO,
    Quaternion,
    vcross,
    vdot,
)
from .errors import DegenerateParams, SingularChoice
from .motionpoly import MotionPoly, ONE_POLY, RealPoly, poly_product, t_squared_plus_one
from .scalars import Scalar, sdiv


@dataclass(frozen=True)
class DarbouxParams:
    """Shape parameters of the motion; a = 0 degenerates to a vertical case."""

    a: Scalar
    b: Scalar
    c: Scalar

    def __post_init__(self):
        if self.a == 0:
            raise DegenerateParams(
                "vertical Darboux motion excluded: parameter a must be nonzero"
            )

    def to_float(self) -> "DarbouxParams":
        return DarbouxParams(float(self.a), float(self.b), float(self.c))


def darboux_c(p: DarbouxParams) -> MotionPoly:
    """Cubic motion polynomial of the motion, monic in t.

    C = t^3 - (k - eps(a j - b k)) t^2 + (1 - eps(b + a i - c k)) t - k + c eps
    """
    a, b, c = p.a, p.b, p.c
    return MotionPoly(
        (
            DualQuaternion(Quaternion(0, 0, 0, -1), Quaternion(c, 0, 0, 0)),
            DualQuaternion(Quaternion(1, 0, 0, 0), Quaternion(-b, -a, 0, c)),
            DualQuaternion(Quaternion(0, 0, 0, -1), Quaternion(0, 0, a, -b)),
            DQ_ONE,
        )
    )


def frame_change(p: DarbouxParams) -> DualQuaternion:
    """Constant left factor k + c*eps linking C to the direct form C0."""
    return DualQuaternion(Q_K, Quaternion(p.c, 0, 0, 0))


def darboux_c0(p: DarbouxParams) -> MotionPoly:
    """Direct form C0 = (k + c*eps) * C; its action gives the parametric equations.

    Expanding the product:
    C0 = (k + c eps) t^3 + (1 + eps(b - a i - c k)) t^2 + (k - eps(a j + b k)) t + 1
    """
    return MotionPoly.constant(frame_change(p)) * darboux_c(p)


def darboux_point_path(
    p: DarbouxParams, point: Sequence[Scalar], phi: float
) -> Tuple[float, float, float]:
    """Evaluate the parametric equations at angle phi (float lane)."""
    a, b, c = float(p.a), float(p.b), float(p.c)
    x, y, z = (float(v) for v in point)
    cp, sp = math.cos(phi), math.sin(phi)
    return (
        x * cp - y * sp,
        x * sp + y * cp + a * sp,
        z + b * sp + c * (1 - cp),
    )


@dataclass(frozen=True)
class Factorization:
    """Ordered factors with product(factors) = cofactor * darboux_c(params)."""

    label: str
    params: DarbouxParams
    factors: Tuple[MotionPoly, ...]
    cofactor: RealPoly
    free_xy: Optional[Tuple[Scalar, Scalar]] = None
    identical_adjacent: Tuple[Tuple[int, int], ...] = ()

    def product(self) -> MotionPoly:
        return poly_product(self.factors)

    def target(self) -> MotionPoly:
        return darboux_c(self.params)

    def verify(self) -> bool:
        return self.product() == self.cofactor.to_motion() * self.target()

    def roots(self) -> Tuple[DualQuaternion, ...]:
        """Root h of each monic linear factor t - h, in factor order."""
        return tuple(-f.coeff(0) for f in self.factors)


def factor_fi(p: DarbouxParams) -> Factorization:
    """Three-factor decomposition C = Q1 Q2 Q3 (no cofactor).

    Q1 Q2 is the unique circular-translation quadratic left factor whose
    second rotation axis direction is the unit vector E; Q3 rotates about
    a vertical axis.
    """
    a, b, c = p.a, p.b, p.c
    n = a * a + b * b + c * c
    e = Quaternion(
        0, sdiv(2 * a * c, n), sdiv(2 * a * b, n), sdiv(a * a - b * b - c * c, n)
    )
    u1 = Quaternion(
        0, -sdiv(b * c, a), sdiv(a * a + c * c - b * b, 2 * a), -b
    )
    q1 = MotionPoly((DualQuaternion(e, u1), DQ_ONE))
    q2 = MotionPoly.t_minus(DualQuaternion(e, Q_ZERO))
    q3 = MotionPoly.t_minus(
        DualQuaternion(
            Q_K,
            Quaternion(0, -sdiv(b * c, a), -sdiv(a * a + b * b - c * c, 2 * a), 0),
        )
    )
    return Factorization("FI", p, (q1, q2, q3), ONE_POLY)


def factor_fii(p: DarbouxParams) -> Factorization:
    """Four rotations with the doubled factor in the middle: Q7 Q6^2 Q5 Q4 = (t^2+1) C."""
    a, b, c = p.a, p.b, p.c
    q7 = MotionPoly(
        (
            DualQuaternion(
                Quaternion(0, 1, 0, 0), Quaternion(0, 0, sdiv(a + c, 2), -sdiv(b, 2))
            ),
            DQ_ONE,
        )
    )
    q6 = MotionPoly.t_minus(DualQuaternion(Quaternion(0, 1, 0, 0), Q_ZERO))
    q5 = MotionPoly(
        (
            DualQuaternion(
                Quaternion(0, 1, 0, 0), Quaternion(0, 0, sdiv(a - c, 2), -sdiv(b, 2))
            ),
            DQ_ONE,
        )
    )
    q4 = MotionPoly.t_minus(DualQuaternion(Q_K, Q_ZERO))
    return Factorization(
        "FII",
        p,
        (q7, q6, q6, q5, q4),
        t_squared_plus_one(),
        identical_adjacent=((1, 2),),
    )


def factor_fiii(
    p: DarbouxParams, x: Scalar = 0, y: Scalar = 0, label: str = "FIII"
) -> Factorization:
    """Four rotations with a doubled two-parameter last factor.

    Q'7 Q'6 Q'5 Q'4^2 = (t^2+1) C with Q'4 = t - k - x eps i - y eps j free in
    (x, y) away from the singular denominators.  Q'5 and Q'6 follow in
    closed form; Q'7 is always produced by exact division (its closed form
    is reconstructed rather than transcribed).
    """
    a, b, c = p.a, p.b, p.c
    t_ = a + 2 * y
    den1 = t_ * t_ + 4 * x * x
    den2 = b * b + c * c + den1
    if den1 == 0 or den2 == 0:
        raise SingularChoice("free parameters x, y hit a vanishing denominator")
    ai = sdiv(b * b * x - a * b * c - 2 * b * c * y - c * c * x, den1) + x
    aj = (
        sdiv(a * b * b - a * c * c + 2 * b * b * y + 4 * b * c * x - 2 * c * c * y, 2 * den1)
        + sdiv(a, 2)
        + y
    )
    q5 = MotionPoly(
        (DualQuaternion(Q_K, Quaternion(0, ai, aj, 0)), DQ_ONE)
    )
    bi = sdiv(2 * (a * c - 2 * b * x + 2 * c * y), den2)
    bj = sdiv(2 * (a * b + 2 * b * y + 2 * c * x), den2)
    bk = sdiv(t_ * t_ - b * b - c * c + 4 * x * x, den2)
    q6 = MotionPoly.t_minus(DualQuaternion(Quaternion(0, bi, -bj, -bk), Q_ZERO))
    q4 = MotionPoly.t_minus(DualQuaternion(Q_K, Quaternion(0, x, y, 0)))
    cofactor = t_squared_plus_one()
    pc = darboux_c(p) * cofactor
    q7, rem = pc.divmod_right(q6 * q5 * q4 * q4)
    assert rem.is_zero() and q7.is_monic_linear()
    return Factorization(
        label,
        p,
        (q7, q6, q5, q4, q4),
        cofactor,
        free_xy=(x, y),
        identical_adjacent=((3, 4),),
    )


def factor_fiv() -> Factorization:
    """Anchor instance of FIII at (a, b, c, x, y) = (1, 2, 0, 0, 0)."""
    return factor_fiii(DarbouxParams(1, 2, 0), 0, 0, label="FIV")


def fiv_companion_fi() -> Factorization:
    """The FI side closing the 7R loop with factor_fiv()."""
    return factor_fi(DarbouxParams(1, 2, 0))


def _solve_affine_pair(
    f: Callable[[Scalar, Scalar], Scalar], g: Callable[[Scalar, Scalar], Scalar]
) -> Tuple[Scalar, Scalar]:
    """Solve f = g = 0 for two unknowns, given that both maps are affine.

    Affinity is probed at (0,0), (1,0), (0,1), (1,1) and asserted, so a
    change that breaks the linear structure fails loudly instead of
    returning nonsense.
    """
    f00, f10, f01, f11 = f(0, 0), f(1, 0), f(0, 1), f(1, 1)
    g00, g10, g01, g11 = g(0, 0), g(1, 0), g(0, 1), g(1, 1)
    fu, fv = f10 - f00, f01 - f00
    gu, gv = g10 - g00, g01 - g00
    if f11 - (f00 + fu + fv) != 0 or g11 - (g00 + gu + gv) != 0:
        raise ValueError("system is not affine in the unknowns")
    det = fu * gv - fv * gu
    if det == 0:
        raise SingularChoice("circularity system is singular for these parameters")
    return (
        sdiv(fv * g00 - f00 * gv, det),
        sdiv(f00 * gu - fu * g00, det),
    )


def _split_circular_quadratic(q: MotionPoly) -> Tuple[MotionPoly, MotionPoly]:
    """Factor a monic circular-translation quadratic as (t - g1)(t - u).

    q = t^2 + eps d1 t + (1 + eps d0); the unique pure-primal right root is
    u = (d1 x d0) / |d1|^2, a unit vector exactly when the translation is
    circular.
    """
    d1 = q.coeff(1).d.vector
    d0 = q.coeff(0).d.vector
    n2 = vdot(d1, d1)
    if n2 == 0:
        raise SingularChoice("translation quadratic has no rotational factor")
    u = vcross(d1, d0)
    u = (sdiv(u[0], n2), sdiv(u[1], n2), sdiv(u[2], n2))
    second = MotionPoly.t_minus(DualQuaternion(Quaternion(0, *u), Q_ZERO))
    first, rem = q.divmod_right(second)
    assert rem.is_zero() and first.is_monic_linear()
    return first, second


def _circularity_conditions(
    cubic: MotionPoly, primal: Quaternion
) -> Tuple[Callable, Callable, Callable]:
    """Conditions on (s, u) making the quotient of cubic by t - (primal + eps(s i + u j))
    a circular translation; returns (cond1, cond2, quotient_for)."""

    def quotient_for(s: Scalar, u: Scalar) -> MotionPoly:
        root = DualQuaternion(primal, Quaternion(0, s, u, 0))
        quot, rem = cubic.divmod_right(MotionPoly.t_minus(root))
        assert rem.is_zero()
        return quot

    def cond1(s: Scalar, u: Scalar) -> Scalar:
        quot = quotient_for(s, u)
        return vdot(quot.coeff(1).d.vector, quot.coeff(0).d.vector)

    def cond2(s: Scalar, u: Scalar) -> Scalar:
        quot = quotient_for(s, u)
        d1 = quot.coeff(1).d.vector
        d0 = quot.coeff(0).d.vector
        return vdot(d1, d1) - vdot(d0, d0)

    return cond1, cond2, quotient_for


def derive_fi(p: DarbouxParams) -> Factorization:
    """Reconstruct FI from scratch by division and the circularity conditions.

    Every k + eps(v i + w j) is a right zero of C; requiring the cubic's
    quotient to be a circular translation pins (v, w) via an affine 2x2
    system, and splitting the quotient at its pure-primal root yields the
    remaining two factors.  Used as an independent cross-check of the
    closed forms in factor_fi.
    """
    c = darboux_c(p)
    cond1, cond2, quotient_for = _circularity_conditions(c, Q_K)
    v, w = _solve_affine_pair(cond1, cond2)
    quot = quotient_for(v, w)
    q1, q2 = _split_circular_quadratic(quot)
    q3 = MotionPoly.t_minus(DualQuaternion(Q_K, Quaternion(0, v, w, 0)))
    return Factorization("FI", p, (q1, q2, q3), ONE_POLY)


def derive_fiii(p: DarbouxParams, x: Scalar = 0, y: Scalar = 0) -> Factorization:
    """Reconstruct FIII from scratch for a given free choice (x, y).

    (t^2+1) C is divided by the doubled factor (remainder must vanish),
    the circularity conditions pin the dual part of Q'5, and the final
    split produces Q'6 and Q'7.  Cross-checks factor_fiii exactly.
    """
    q4root = DualQuaternion(Q_K, Quaternion(0, x, y, 0))
    q4 = MotionPoly.t_minus(q4root)
    pc = darboux_c(p) * t_squared_plus_one()
    c2, rem = pc.divmod_right(q4 * q4)
    assert rem.is_zero()
    cond1, cond2, quotient_for = _circularity_conditions(c2, -Q_K)
    alpha, beta = _solve_affine_pair(cond1, cond2)
    quot = quotient_for(alpha, beta)
    q7, q6 = _split_circular_quadratic(quot)
    q5 = MotionPoly.t_minus(DualQuaternion(-Q_K, Quaternion(0, alpha, beta, 0)))
    return Factorization(
        "FIII",
        p,
        (q7, q6, q5, q4, q4),
        t_squared_plus_one(),
        free_xy=(x, y),
        identical_adjacent=((3, 4),),
    )


@dataclass(frozen=True)
class CircularTranslationReport:
    """Orbit geometry of the translation quotient C / Q3 and a perturbed twin."""

    params: DarbouxParams
    points: Tuple[Tuple[float, float, float], ...]
    n_samples: int
    quotient_primal_ok: bool
    radii: Tuple[float, ...]
    radius_spread: float
    perturbed_semi_axes: Tuple[Tuple[float, float], ...]
    perturbed_ratio_devs: Tuple[float, ...]


_DEFAULT_ORBIT_POINTS = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 2, 3), (-2, 1, 1))


def phi_grid(n: int) -> Tuple[float, ...]:
    """Midpoints of a uniform grid on (-pi, pi); odd n includes phi = 0."""
    return tuple(-math.pi + 2 * math.pi * (k + 0.5) / n for k in range(n))


def t_grid(n: int) -> Tuple[float, ...]:
    """Parameter samples spread over the whole closed orbit via t = tan(phi/2)."""
    return tuple(math.tan(phi / 2) for phi in phi_grid(n))


def _orbit(poly: MotionPoly, point: Sequence[float], ts: Sequence[float]):
    pf = poly.to_float()
    px, py, pz = (float(v) for v in point)
    return [pf.eval(t).act((1.0, px, py, pz))[1:] for t in ts]


def circular_translation_check(
    p: DarbouxParams,
    points: Sequence[Sequence[Scalar]] = _DEFAULT_ORBIT_POINTS,
    n_samples: int = 24,
    perturbation: Scalar = 1,
) -> CircularTranslationReport:
    """Verify that C / Q3 is a circular translation and that circularity is sharp.

    The quotient of C by the FI factor Q3 must have primal part t^2 + 1
    (a translation).  Its sampled point orbits are circles of one common
    radius; replacing Q3's j dual coordinate by w + perturbation keeps the
    quotient a translation but the orbits become visibly non-circular
    ellipses.
    """
    fi = factor_fi(p)
    q3 = fi.factors[2]
    c = darboux_c(p)
    quot, rem = c.divmod_right(q3)
    primal_ok = (
        rem.is_zero()
        and quot.coeff(2) == DQ_ONE
        and quot.coeff(1).p.is_zero()
        and quot.coeff(0).p == Quaternion(1, 0, 0, 0)
    )
    ts = t_grid(n_samples)
    radii = []
    for pt in points:
        rep = conics.trace_fit(_orbit(quot, pt, ts))
        if rep.conic_class is not conics.ConicClass.CIRCLE or rep.conic is None:
            radii.append(float("nan"))
        else:
            radii.append((rep.conic.semi_major + rep.conic.semi_minor) / 2)
    spread = max(radii) - min(radii) if radii else 0.0

    q3root = -q3.coeff(0)
    q3p = q3root + DualQuaternion(Q_ZERO, Quaternion(0, 0, perturbation, 0))
    quot_p, rem_p = c.divmod_right(MotionPoly.t_minus(q3p))
    assert rem_p.is_zero()
    axes = []
    devs = []
    for pt in points:
        rep = conics.trace_fit(_orbit(quot_p, pt, ts))
        if rep.conic is None or rep.conic.semi_major is None:
            axes.append((float("nan"), float("nan")))
            devs.append(float("nan"))
        else:
            axes.append((rep.conic.semi_major, rep.conic.semi_minor))
            devs.append(abs(rep.conic.axis_ratio - 1))
    return CircularTranslationReport(
        params=p,
        points=tuple(tuple(float(v) for v in pt) for pt in points),
        n_samples=n_samples,
        quotient_primal_ok=primal_ok,
        radii=tuple(radii),
        radius_spread=spread,
        perturbed_semi_axes=tuple(axes),
        perturbed_ratio_devs=tuple(devs),
    )
