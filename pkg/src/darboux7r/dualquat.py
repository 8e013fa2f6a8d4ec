"""Quaternions, dual quaternions, and rigid displacements.

A dual quaternion h = p + eps*d is stored as a primal quaternion p and a
dual quaternion part d, with eps^2 = 0 and eps commuting with everything.
Conjugation negates the six i, j, k coefficients (of both parts); the
norm h * conj(h) is then a dual number (n0, n1).  Elements with real
norm (n1 = 0) and nonzero primal part act on points of projective
3-space and represent rigid displacements.

Coefficients are either exact rationals (int / Fraction) or floats; all
formulas are polynomial except for a few divisions routed through
scalars.sdiv, so both backends share the code.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Tuple

from .errors import NotADisplacement, NotARotation, ZeroPrimal
from .scalars import Scalar, is_exact, sdiv

Vec3 = Tuple[Scalar, Scalar, Scalar]

# Relative tolerance used only on the float backend when checking the
# "norm is real" precondition; exact coefficients are compared to zero.
_FLOAT_REAL_NORM_RTOL = 1e-9


def vadd(u: Vec3, v: Vec3) -> Vec3:
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2])


def vsub(u: Vec3, v: Vec3) -> Vec3:
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2])


def vscale(u: Vec3, s: Scalar) -> Vec3:
    return (u[0] * s, u[1] * s, u[2] * s)


def vdot(u: Vec3, v: Vec3) -> Scalar:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def vcross(u: Vec3, v: Vec3) -> Vec3:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def viszero(u: Vec3) -> bool:
    return u[0] == 0 and u[1] == 0 and u[2] == 0


@dataclass(frozen=True)
class Quaternion:
    """Quaternion w + x*i + y*j + z*k with i^2 = j^2 = k^2 = ijk = -1."""

    w: Scalar
    x: Scalar
    y: Scalar
    z: Scalar

    @classmethod
    def from_scalar_vector(cls, s: Scalar, v: Vec3) -> "Quaternion":
        return cls(s, v[0], v[1], v[2])

    @classmethod
    def from_vector(cls, v: Vec3) -> "Quaternion":
        return cls(0, v[0], v[1], v[2])

    @property
    def vector(self) -> Vec3:
        return (self.x, self.y, self.z)

    def is_zero(self) -> bool:
        return self.w == 0 and self.x == 0 and self.y == 0 and self.z == 0

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> Scalar:
        """Quaternion norm q * conj(q), the sum of squared coefficients."""
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def dot(self, other: "Quaternion") -> Scalar:
        """Euclidean inner product of the coefficient 4-vectors."""
        return (
            self.w * other.w
            + self.x * other.x
            + self.y * other.y
            + self.z * other.z
        )

    def scale(self, s: Scalar) -> "Quaternion":
        return Quaternion(self.w * s, self.x * s, self.y * s, self.z * s)

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(
            self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z
        )

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(
            self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z
        )

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            a, b = self, other
            return Quaternion(
                a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
            )
        if isinstance(other, (int, float)) or is_exact(other):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        # Scalars are central, so left and right scaling agree.
        if isinstance(other, (int, float)) or is_exact(other):
            return self.scale(other)
        return NotImplemented

    def is_float(self) -> bool:
        return not (
            is_exact(self.w) and is_exact(self.x) and is_exact(self.y) and is_exact(self.z)
        )

    def to_float(self) -> "Quaternion":
        return Quaternion(float(self.w), float(self.x), float(self.y), float(self.z))


Q_ZERO = Quaternion(0, 0, 0, 0)
Q_ONE = Quaternion(1, 0, 0, 0)
Q_I = Quaternion(0, 1, 0, 0)
Q_J = Quaternion(0, 0, 1, 0)
Q_K = Quaternion(0, 0, 0, 1)


class DisplacementKind(Enum):
    IDENTITY = "Identity"
    ROTATION = "Rotation"
    TRANSLATION = "Translation"
    GENERAL = "General"
    NON_DISPLACEMENT = "NonDisplacement"


@dataclass(frozen=True)
class DualQuaternion:
    """Dual quaternion p + eps*d over exact rational or float scalars."""

    p: Quaternion
    d: Quaternion

    @classmethod
    def from_coeffs(cls, h: Sequence[Scalar]) -> "DualQuaternion":
        """Build from the eight coefficients [h0..h7], primal then dual."""
        if len(h) != 8:
            raise ValueError("expected eight coefficients")
        return cls(Quaternion(h[0], h[1], h[2], h[3]), Quaternion(h[4], h[5], h[6], h[7]))

    @classmethod
    def from_primal(cls, p: Quaternion) -> "DualQuaternion":
        return cls(p, Q_ZERO)

    @classmethod
    def from_scalar(cls, s: Scalar) -> "DualQuaternion":
        return cls(Quaternion(s, 0, 0, 0), Q_ZERO)

    @classmethod
    def identity(cls) -> "DualQuaternion":
        return cls(Q_ONE, Q_ZERO)

    def coeffs(self) -> Tuple[Scalar, ...]:
        p, d = self.p, self.d
        return (p.w, p.x, p.y, p.z, d.w, d.x, d.y, d.z)

    def is_zero(self) -> bool:
        return self.p.is_zero() and self.d.is_zero()

    def conj(self) -> "DualQuaternion":
        return DualQuaternion(self.p.conj(), self.d.conj())

    def norm(self) -> Tuple[Scalar, Scalar]:
        """Dual number h * conj(h) as a pair (real part, dual part)."""
        n0 = self.p.norm()
        # p*conj(d) + d*conj(p) collapses to twice the 4-vector inner product.
        n1 = 2 * self.p.dot(self.d)
        return (n0, n1)

    def has_real_norm(self) -> bool:
        n0, n1 = self.norm()
        if is_exact(n1):
            return n1 == 0
        return abs(n1) <= _FLOAT_REAL_NORM_RTOL * max(1.0, abs(n0))

    def scale(self, s: Scalar) -> "DualQuaternion":
        return DualQuaternion(self.p.scale(s), self.d.scale(s))

    def __add__(self, other: "DualQuaternion") -> "DualQuaternion":
        return DualQuaternion(self.p + other.p, self.d + other.d)

    def __sub__(self, other: "DualQuaternion") -> "DualQuaternion":
        return DualQuaternion(self.p - other.p, self.d - other.d)

    def __neg__(self) -> "DualQuaternion":
        return DualQuaternion(-self.p, -self.d)

    def __mul__(self, other):
        if isinstance(other, DualQuaternion):
            # eps^2 = 0: (p1 + eps d1)(p2 + eps d2) = p1 p2 + eps(p1 d2 + d1 p2)
            return DualQuaternion(
                self.p * other.p, self.p * other.d + self.d * other.p
            )
        if isinstance(other, (int, float)) or is_exact(other):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)) or is_exact(other):
            return self.scale(other)
        return NotImplemented

    def invertible(self) -> bool:
        return not self.p.is_zero()

    def inverse(self) -> "DualQuaternion":
        """Inverse conj(h) / Norm(h); requires a nonzero primal part."""
        if not self.invertible():
            raise ZeroPrimal("dual quaternion with zero primal part has no inverse")
        n0, n1 = self.norm()
        c = self.conj()
        # (n0 + eps n1)^{-1} = 1/n0 - eps n1/n0^2, a central dual number.
        inv0 = sdiv(1, n0)
        inv1 = -sdiv(n1, n0 * n0)
        return DualQuaternion(c.p.scale(inv0), c.d.scale(inv0) + c.p.scale(inv1))

    def act(self, point: Sequence[Scalar]) -> Tuple[Scalar, ...]:
        """Apply the displacement to a projective point [x0, x1, x2, x3].

        The image is (p*x*conj(p) + x0*(p*conj(d) - d*conj(p))) / (p*conj(p))
        with x = x1*i + x2*j + x3*k; the homogeneous coordinate is preserved.
        Requires a real norm and a nonzero primal part.
        """
        if not self.invertible():
            raise ZeroPrimal("cannot act with zero primal part")
        if not self.has_real_norm():
            raise NotADisplacement("norm has a nonzero dual part")
        if len(point) != 4:
            raise ValueError("expected a projective 4-vector")
        x0 = point[0]
        xq = Quaternion(0, point[1], point[2], point[3])
        p, d = self.p, self.d
        rotated = p * xq * p.conj()
        translated = p * d.conj() - d * p.conj()
        y = rotated + translated.scale(x0)
        n0 = p.norm()
        return (x0, sdiv(y.x, n0), sdiv(y.y, n0), sdiv(y.z, n0))

    def classify(self) -> DisplacementKind:
        """Sort displacements into identity / rotation / translation / general.

        Elements with non-real norm or vanishing primal part are not
        displacements.  Rotations are exactly the elements with zero dual
        scalar part and nonzero primal vector; translations have scalar
        primal part and pure-vector dual part.
        """
        if self.is_zero():
            return DisplacementKind.NON_DISPLACEMENT
        if not self.has_real_norm():
            return DisplacementKind.NON_DISPLACEMENT
        if self.p.is_zero():
            return DisplacementKind.NON_DISPLACEMENT
        if self.d.w != 0:
            return DisplacementKind.GENERAL
        if not viszero(self.p.vector):
            return DisplacementKind.ROTATION
        if not viszero(self.d.vector):
            return DisplacementKind.TRANSLATION
        return DisplacementKind.IDENTITY

    def axis(self) -> "AxisLine":
        """Axis of a rotation as a line with direction and moment."""
        if self.classify() is not DisplacementKind.ROTATION:
            raise NotARotation("axis is defined for rotation quaternions only")
        h = self.coeffs()
        return AxisLine((h[1], h[2], h[3]), (-h[5], -h[6], -h[7]))

    def is_float(self) -> bool:
        return self.p.is_float() or self.d.is_float()

    def to_float(self) -> "DualQuaternion":
        return DualQuaternion(self.p.to_float(), self.d.to_float())


DQ_ONE = DualQuaternion.identity()


def _proportional(u: Sequence[Scalar], v: Sequence[Scalar], tol: float) -> bool:
    """Whether two coefficient vectors agree up to a scalar multiple."""
    if tol == 0:
        # All 2x2 minors vanish; exact and sign-free.
        n = len(u)
        for a in range(n):
            for b in range(a + 1, n):
                if u[a] * v[b] - u[b] * v[a] != 0:
                    return False
        return True
    nu = math.sqrt(sum(float(c) * float(c) for c in u))
    nv = math.sqrt(sum(float(c) * float(c) for c in v))
    if nu == 0 or nv == 0:
        return nu == nv
    uu = [float(c) / nu for c in u]
    vv = [float(c) / nv for c in v]
    same = max(abs(a - b) for a, b in zip(uu, vv))
    flip = max(abs(a + b) for a, b in zip(uu, vv))
    return min(same, flip) <= tol


@dataclass(frozen=True)
class AxisLine:
    """Line in 3-space with direction d and moment m = point x d (d . m = 0)."""

    direction: Vec3
    moment: Vec3

    def __post_init__(self):
        if viszero(self.direction):
            raise ValueError("axis line needs a nonzero direction")

    def point_nearest_origin(self) -> Vec3:
        n2 = vdot(self.direction, self.direction)
        c = vcross(self.direction, self.moment)
        return (sdiv(c[0], n2), sdiv(c[1], n2), sdiv(c[2], n2))

    def is_parallel_to(self, other: "AxisLine", tol: float = 0.0) -> bool:
        return _proportional(self.direction, other.direction, tol)

    def same_line(self, other: "AxisLine", tol: float = 0.0) -> bool:
        u = tuple(self.direction) + tuple(self.moment)
        v = tuple(other.direction) + tuple(other.moment)
        return _proportional(u, v, tol)

    def transformed_by(self, pose: DualQuaternion) -> "AxisLine":
        return transform_axis(pose, self)

    def to_float(self) -> "AxisLine":
        return AxisLine(
            tuple(float(c) for c in self.direction),
            tuple(float(c) for c in self.moment),
        )


def projectively_equal(h1: DualQuaternion, h2: DualQuaternion) -> bool:
    """Exact equality up to a scalar multiple (all 2x2 coefficient minors vanish)."""
    if h1.is_zero() or h2.is_zero():
        return False
    u = h1.coeffs()
    v = h2.coeffs()
    for a in range(8):
        for b in range(a + 1, 8):
            if u[a] * v[b] - u[b] * v[a] != 0:
                return False
    return True


def projective_distance(h1: DualQuaternion, h2: DualQuaternion) -> float:
    """Float distance between the rays of two dual quaternions.

    Both coefficient vectors are scaled to unit length and compared with
    the sign resolved to the closer match; 0 means the same projective
    element.
    """
    u = [float(c) for c in h1.coeffs()]
    v = [float(c) for c in h2.coeffs()]
    nu = math.sqrt(sum(c * c for c in u))
    nv = math.sqrt(sum(c * c for c in v))
    if nu == 0 or nv == 0:
        return 0.0 if nu == nv else float("inf")
    u = [c / nu for c in u]
    v = [c / nv for c in v]
    same = max(abs(a - b) for a, b in zip(u, v))
    flip = max(abs(a + b) for a, b in zip(u, v))
    return min(same, flip)


def transform_axis(pose: DualQuaternion, ax: AxisLine) -> AxisLine:
    """Map a line through a displacement by mapping two of its points.

    Orientation of the direction is preserved; the moment is rebuilt as
    q1 x q2 from the two image points, so a unit-length direction stays
    unit length.
    """
    p1 = ax.point_nearest_origin()
    p2 = vadd(p1, ax.direction)
    q1 = pose.act((1, p1[0], p1[1], p1[2]))[1:]
    q2 = pose.act((1, p2[0], p2[1], p2[2]))[1:]
    return AxisLine(vsub(q2, q1), vcross(q1, q2))
