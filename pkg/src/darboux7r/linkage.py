"""Closed-loop revolute linkages assembled from two motion factorizations.

Two factorizations of the same motion (up to real cofactors) give two
open chains from the base to the coupler; gluing them produces a closed
loop.  Each monic linear factor with a rotation root contributes one
revolute joint; consecutive identical factors collapse into a single
joint (a doubled factor rotates about its own fixed axis, so both copies
share one line in every configuration).

Joints are numbered 1..n around the loop: chain A base to coupler in
factor order, then chain B coupler back to base (reverse factor order).
The pose of link j at parameter t is the product of its chain's first j
factor values; axes are stored in the chain's reference placement and
transported by those poses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from . import conics
from .darboux import Factorization
from .dualquat import (
    AxisLine,
    DQ_ONE,
    DisplacementKind,
    DualQuaternion,
    projective_distance,
    projectively_equal,
    transform_axis,
)
from .errors import ClosureFailure, NotRotational
from .motionpoly import MotionPoly, poly_product
from .scalars import Scalar, is_exact

RANK_RTOL = 1e-8
PARALLEL_FLOAT_TOL = 1e-9


@dataclass(frozen=True)
class Joint:
    """One revolute joint: chain side, collapsed factor positions, geometry."""

    chain: str  # "A" or "B"
    factor_indices: Tuple[int, ...]  # 0-based positions in the chain's factor list
    root: DualQuaternion
    reference_axis: AxisLine  # in the chain's reference placement
    home_axis: AxisLine  # in the world frame at t = 0

    @property
    def multiplicity(self) -> int:
        return len(self.factor_indices)


@dataclass(frozen=True)
class Linkage:
    chain_a: Factorization
    chain_b: Factorization
    joints: Tuple[Joint, ...]
    degenerate: bool

    @property
    def joint_count(self) -> int:
        return len(self.joints)

    def home_axes(self) -> Tuple[AxisLine, ...]:
        return tuple(j.home_axis for j in self.joints)


def _runs_of_equal(factors: Sequence[MotionPoly]) -> List[Tuple[int, ...]]:
    runs: List[Tuple[int, ...]] = []
    i = 0
    while i < len(factors):
        j = i + 1
        while j < len(factors) and factors[j] == factors[i]:
            j += 1
        runs.append(tuple(range(i, j)))
        i = j
    return runs


def _chain_joints(f: Factorization, side: str) -> List[Joint]:
    joints = []
    for run in _runs_of_equal(f.factors):
        factor = f.factors[run[0]]
        if not factor.is_monic_linear():
            raise NotRotational("every factor must be monic linear")
        root = -factor.coeff(0)
        if root.classify() is not DisplacementKind.ROTATION:
            raise NotRotational("factor root is not a rotation quaternion")
        reference = root.axis()
        pose_home = poly_product(f.factors[: run[0]]).eval(0)
        home = transform_axis(pose_home, reference)
        joints.append(Joint(side, run, root, reference, home))
    return joints


def build_linkage(fa: Factorization, fb: Factorization) -> Linkage:
    """Assemble the closed loop of two factorizations of one motion.

    Requires the exact closure identity
    product(fa) * cofactor_b = product(fb) * cofactor_a.
    A pair of identical chains closes trivially but has zero relative
    motion; it is flagged degenerate rather than rejected.
    """
    lhs = fa.product() * fb.cofactor
    rhs = fb.product() * fa.cofactor
    if lhs != rhs:
        raise ClosureFailure("chains do not parameterize the same motion")
    joints = tuple(_chain_joints(fa, "A") + list(reversed(_chain_joints(fb, "B"))))
    return Linkage(fa, fb, joints, degenerate=fa.factors == fb.factors)


def chain_poses(f: Factorization, t: Scalar) -> List[DualQuaternion]:
    """Pose of every link of one open chain at parameter t (base first).

    Entry j is the product of the first j factor values; the last entry
    is projectively the motion times its cofactor value.
    """
    poses = [DQ_ONE]
    for factor in f.factors:
        poses.append(poses[-1] * factor.eval(t))
    return poses


def joint_angle(factor: Union[MotionPoly, DualQuaternion], t: Scalar) -> float:
    """Rotation angle of a monic linear factor's value at t, in (0, 2*pi).

    For root h: cot(theta/2) = (t - h0) / |vec h|, resolved monotonically
    decreasing with theta(0) = pi for t - k; the limits t -> +-inf give
    0 and 2*pi.
    """
    root = factor if isinstance(factor, DualQuaternion) else -factor.coeff(0)
    h0 = float(root.p.w)
    v = root.p.vector
    vn = math.sqrt(sum(float(c) * float(c) for c in v))
    if vn == 0:
        raise NotRotational("root has no rotational part")
    return math.pi - 2 * math.atan((float(t) - h0) / vn)


def _prefix_values(f: Factorization, t: Scalar) -> List[DualQuaternion]:
    return chain_poses(f, t)


def axes_at(linkage: Linkage, t: Scalar) -> Tuple[AxisLine, ...]:
    """World axis line of every joint at parameter t, in cycle order."""
    pre_a = _prefix_values(linkage.chain_a, t)
    pre_b = _prefix_values(linkage.chain_b, t)
    out = []
    for joint in linkage.joints:
        prefix = pre_a if joint.chain == "A" else pre_b
        pose = prefix[joint.factor_indices[0]]
        out.append(transform_axis(pose, joint.reference_axis))
    return tuple(out)


def screw_matrix(axes: Sequence[AxisLine]) -> np.ndarray:
    """6 x n matrix of unit revolute screws (direction; moment) per axis."""
    cols = []
    for ax in axes:
        d = np.array([float(c) for c in ax.direction])
        m = np.array([float(c) for c in ax.moment])
        n = np.linalg.norm(d)
        cols.append(np.concatenate([d / n, m / n]))
    return np.array(cols).T


@dataclass(frozen=True)
class MobilityReport:
    t: float
    singular_values: Tuple[float, ...]
    rank: int
    dof: int
    tol: float


def mobility_at(linkage: Linkage, t: Scalar, tol: float = RANK_RTOL) -> MobilityReport:
    """Instantaneous mobility from the rank of the joint screw system.

    dof = joint_count - numeric rank, with singular values below
    tol * sigma_max treated as zero.
    """
    mat = screw_matrix(axes_at(linkage, t))
    sv = np.linalg.svd(mat, compute_uv=False)
    smax = sv[0] if len(sv) else 0.0
    rank = int(np.sum(sv > tol * smax)) if smax > 0 else 0
    return MobilityReport(
        t=float(t),
        singular_values=tuple(float(s) for s in sv),
        rank=rank,
        dof=linkage.joint_count - rank,
        tol=tol,
    )


def _axes_exact(axes: Sequence[AxisLine]) -> bool:
    return all(
        all(is_exact(c) for c in ax.direction) and all(is_exact(c) for c in ax.moment)
        for ax in axes
    )


def parallel_groups(
    linkage: Linkage, t: Optional[Scalar] = None, tol: Optional[float] = None
) -> Tuple[Tuple[int, ...], ...]:
    """Partition of joint numbers 1..n into groups of mutually parallel axes.

    Uses the home axes (t = 0) unless a parameter value is given.  Exact
    axes compare exactly; float axes use a direction tolerance.
    """
    axes = linkage.home_axes() if t is None else axes_at(linkage, t)
    if tol is None:
        tol = 0.0 if _axes_exact(axes) else PARALLEL_FLOAT_TOL
    groups: List[List[int]] = []
    reps: List[AxisLine] = []
    for idx, ax in enumerate(axes, start=1):
        for g, rep in zip(groups, reps):
            if ax.is_parallel_to(rep, tol):
                g.append(idx)
                break
        else:
            groups.append([idx])
            reps.append(ax)
    return tuple(tuple(g) for g in groups)


@dataclass(frozen=True)
class SarrusDecomposition:
    fixed_joint: int
    arc_a: Tuple[int, int, int]
    arc_b: Tuple[int, int, int]


@dataclass(frozen=True)
class SubstructureReport:
    groups: Tuple[Tuple[int, ...], ...]
    four_bar_runs: Tuple[Tuple[int, ...], ...]
    sarrus: Tuple[SarrusDecomposition, ...]

    @property
    def has_four_bar(self) -> bool:
        return bool(self.four_bar_runs)

    @property
    def has_sarrus(self) -> bool:
        return bool(self.sarrus)


def substructure_report(
    linkage: Linkage, t: Optional[Scalar] = None, tol: Optional[float] = None
) -> SubstructureReport:
    """Detect parallel-axis substructures in the joint cycle.

    A planar four-bar shows up as four (or more) cyclically consecutive
    joints with parallel axes; a Sarrus decomposition fixes one joint and
    splits the remaining six into two arcs of three consecutive joints,
    each arc internally parallel.
    """
    groups = parallel_groups(linkage, t, tol)
    n = linkage.joint_count
    group_of = {}
    for gi, g in enumerate(groups):
        for j in g:
            group_of[j] = gi

    def cyc(j: int) -> int:
        return (j - 1) % n + 1

    four_bar: List[Tuple[int, ...]] = []
    if n >= 4:
        # Maximal cyclic runs of same-group joints.
        starts = [
            j for j in range(1, n + 1) if group_of[j] != group_of[cyc(j - 1)]
        ]
        if not starts:
            four_bar.append(tuple(range(1, n + 1)))
        else:
            for s in starts:
                run = [s]
                while group_of[cyc(run[-1] + 1)] == group_of[s] and len(run) < n:
                    run.append(cyc(run[-1] + 1))
                if len(run) >= 4:
                    four_bar.append(tuple(run))

    sarrus: List[SarrusDecomposition] = []
    if n == 7:
        for fixed in range(1, n + 1):
            arc_a = tuple(cyc(fixed + k) for k in (1, 2, 3))
            arc_b = tuple(cyc(fixed + k) for k in (4, 5, 6))
            if (
                len({group_of[j] for j in arc_a}) == 1
                and len({group_of[j] for j in arc_b}) == 1
            ):
                sarrus.append(SarrusDecomposition(fixed, arc_a, arc_b))
    return SubstructureReport(groups, tuple(four_bar), tuple(sarrus))


@dataclass(frozen=True)
class ConfigSample:
    """One simulated configuration of the closed loop."""

    t: Scalar
    poses_a: Tuple[DualQuaternion, ...]
    poses_b: Tuple[DualQuaternion, ...]
    axes: Tuple[AxisLine, ...]
    angles: Tuple[float, ...]
    closure_residual: float

    @property
    def coupler_pose(self) -> DualQuaternion:
        return self.poses_a[-1]


def closure_residual(linkage: Linkage, t: Scalar) -> float:
    """Projective gap between the two chain end poses (0 when the loop closes).

    Both ends equal the common motion up to central real cofactor values,
    so they are the same projective element at every closure parameter.
    """
    ea = chain_poses(linkage.chain_a, t)[-1]
    eb = chain_poses(linkage.chain_b, t)[-1]
    return projective_distance(ea, eb)


def closes_exactly(linkage: Linkage, t: Scalar) -> bool:
    """Exact projective equality of the two chain end poses at rational t."""
    ea = chain_poses(linkage.chain_a, t)[-1]
    eb = chain_poses(linkage.chain_b, t)[-1]
    return projectively_equal(ea, eb)


def simulate(linkage: Linkage, ts: Sequence[Scalar]) -> Tuple[ConfigSample, ...]:
    """Sample the loop at the given parameter values."""
    out = []
    for t in ts:
        pre_a = _prefix_values(linkage.chain_a, t)
        pre_b = _prefix_values(linkage.chain_b, t)
        axes = []
        angles = []
        for joint in linkage.joints:
            prefix = pre_a if joint.chain == "A" else pre_b
            axes.append(transform_axis(prefix[joint.factor_indices[0]], joint.reference_axis))
            angles.append(joint.multiplicity * joint_angle(joint.root, t))
        res = projective_distance(pre_a[-1], pre_b[-1])
        out.append(
            ConfigSample(
                t=t,
                poses_a=tuple(pre_a),
                poses_b=tuple(pre_b),
                axes=tuple(axes),
                angles=tuple(angles),
                closure_residual=res,
            )
        )
    return tuple(out)


def trace_point(
    source: Union[Linkage, Factorization, MotionPoly],
    point: Sequence[Scalar],
    ts: Sequence[float],
    plane_rtol: float = conics.PLANE_RTOL,
    circle_rtol: float = conics.CIRCLE_RTOL,
) -> conics.TrajectoryReport:
    """Sample the orbit of a coupler point and classify the trajectory."""
    if isinstance(source, Linkage):
        poly = source.chain_a.product()
    elif isinstance(source, Factorization):
        poly = source.product()
    else:
        poly = source
    pf = poly.to_float()
    px, py, pz = (float(v) for v in point)
    orbit = [pf.eval(float(t)).act((1.0, px, py, pz))[1:] for t in ts]
    return conics.trace_fit(
        orbit,
        plane_rtol=plane_rtol,
        circle_rtol=circle_rtol,
        moving_point=(px, py, pz),
    )
