"""JSON and CSV encoding with exact rational round-trips.

Exact scalars serialize as canonical rational strings ("3/4", "-2"),
floats as JSON numbers; parsing maps strings back to Fraction, integers
to int, and other numbers to float, so a file written from the exact
backend reloads exactly.  Dual quaternion coefficients are stored as
eight scalars [h0..h7], primal before dual; polynomial coefficient lists
are indexed by degree.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from typing import Any, Dict, List, Sequence

from .conics import TrajectoryReport
from .darboux import DarbouxParams, Factorization
from .dualquat import AxisLine, DualQuaternion
from .linkage import ConfigSample, Linkage, MobilityReport
from .motionpoly import MotionPoly, RealPoly
from .scalars import Scalar, format_scalar, is_exact


def scalar_to_json(x: Scalar):
    return format_scalar(x)


def scalar_from_json(v) -> Scalar:
    if isinstance(v, str):
        return Fraction(v)
    if isinstance(v, bool):
        raise ValueError("boolean is not a scalar")
    if isinstance(v, int):
        return v
    if isinstance(v, float):
        return v
    raise ValueError(f"cannot parse scalar from {v!r}")


def dq_to_json(h: DualQuaternion) -> List:
    return [scalar_to_json(c) for c in h.coeffs()]


def dq_from_json(arr: Sequence) -> DualQuaternion:
    return DualQuaternion.from_coeffs([scalar_from_json(v) for v in arr])


def axis_to_json(ax: AxisLine) -> Dict[str, Any]:
    return {
        "direction": [scalar_to_json(c) for c in ax.direction],
        "moment": [scalar_to_json(c) for c in ax.moment],
    }


def axis_from_json(d: Dict[str, Any]) -> AxisLine:
    return AxisLine(
        tuple(scalar_from_json(v) for v in d["direction"]),
        tuple(scalar_from_json(v) for v in d["moment"]),
    )


def motionpoly_to_json(p: MotionPoly) -> List[List]:
    return [dq_to_json(c) for c in p.coeffs]


def motionpoly_from_json(arr: Sequence[Sequence]) -> MotionPoly:
    return MotionPoly(tuple(dq_from_json(row) for row in arr))


def realpoly_to_json(p: RealPoly) -> List:
    return [scalar_to_json(c) for c in p.coeffs]


def realpoly_from_json(arr: Sequence) -> RealPoly:
    return RealPoly(tuple(scalar_from_json(v) for v in arr))


def params_to_json(p: DarbouxParams) -> Dict[str, Any]:
    return {
        "a": scalar_to_json(p.a),
        "b": scalar_to_json(p.b),
        "c": scalar_to_json(p.c),
    }


def params_from_json(d: Dict[str, Any]) -> DarbouxParams:
    return DarbouxParams(
        scalar_from_json(d["a"]), scalar_from_json(d["b"]), scalar_from_json(d["c"])
    )


def factorization_to_json(f: Factorization) -> Dict[str, Any]:
    return {
        "label": f.label,
        "params": params_to_json(f.params),
        "free_xy": None
        if f.free_xy is None
        else [scalar_to_json(v) for v in f.free_xy],
        "cofactor": realpoly_to_json(f.cofactor),
        "factors": [motionpoly_to_json(q) for q in f.factors],
        "identical_adjacent": [list(pair) for pair in f.identical_adjacent],
    }


def factorization_from_json(d: Dict[str, Any]) -> Factorization:
    free = d.get("free_xy")
    return Factorization(
        label=d["label"],
        params=params_from_json(d["params"]),
        factors=tuple(motionpoly_from_json(q) for q in d["factors"]),
        cofactor=realpoly_from_json(d["cofactor"]),
        free_xy=None if free is None else tuple(scalar_from_json(v) for v in free),
        identical_adjacent=tuple(tuple(pair) for pair in d["identical_adjacent"]),
    )


def closure_certificate(linkage: Linkage) -> str:
    """SHA-256 of the canonical JSON of the common motion (times both cofactors)."""
    common = linkage.chain_a.product() * linkage.chain_b.cofactor
    payload = json.dumps(motionpoly_to_json(common), separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()


def linkage_to_json(linkage: Linkage) -> Dict[str, Any]:
    return {
        "chain_a": factorization_to_json(linkage.chain_a),
        "chain_b": factorization_to_json(linkage.chain_b),
        "degenerate": linkage.degenerate,
        "joint_count": linkage.joint_count,
        "joints": [
            {
                "number": i + 1,
                "chain": j.chain,
                "factor_indices": list(j.factor_indices),
                "root": dq_to_json(j.root),
                "reference_axis": axis_to_json(j.reference_axis),
                "home_axis": axis_to_json(j.home_axis),
            }
            for i, j in enumerate(linkage.joints)
        ],
        "closure_certificate_sha256": closure_certificate(linkage),
    }


def trajectory_to_json(rep: TrajectoryReport) -> Dict[str, Any]:
    out: Dict[str, Any] = {
        "point": list(rep.point) if rep.point is not None else None,
        "n_samples": rep.n_samples,
        "diameter": rep.diameter,
        "plane_residual": rep.plane_residual,
        "plane_ok": rep.plane_ok,
        "conic_class": rep.conic_class.value,
    }
    if rep.plane is not None:
        out["plane"] = {
            "centroid": list(rep.plane.centroid),
            "normal": list(rep.plane.normal),
        }
    if rep.conic is not None:
        out["conic"] = {
            "coeffs": list(rep.conic.coeffs),
            "semi_major": rep.conic.semi_major,
            "semi_minor": rep.conic.semi_minor,
            "center_2d": list(rep.conic.center) if rep.conic.center else None,
        }
    return out


def mobility_to_json(rep: MobilityReport) -> Dict[str, Any]:
    return {
        "t": rep.t,
        "singular_values": list(rep.singular_values),
        "rank": rep.rank,
        "dof": rep.dof,
        "tol": rep.tol,
    }


def mobility_to_csv(reports: Sequence[MobilityReport]) -> str:
    if not reports:
        return "t,rank,dof\n"
    nsv = max(len(r.singular_values) for r in reports)
    header = ["t", "rank", "dof"] + [f"sv{i + 1}" for i in range(nsv)]
    lines = [",".join(header)]
    for r in reports:
        row = [repr(r.t), str(r.rank), str(r.dof)]
        row += [repr(s) for s in r.singular_values]
        row += [""] * (nsv - len(r.singular_values))
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def samples_to_csv(samples: Sequence[ConfigSample]) -> str:
    """One row per configuration: t, joint angles, coupler pose coefficients."""
    if not samples:
        return "t\n"
    n = len(samples[0].angles)
    header = (
        ["t"]
        + [f"theta{i + 1}" for i in range(n)]
        + [f"coupler_h{i}" for i in range(8)]
        + ["closure_residual"]
    )
    lines = [",".join(header)]
    for s in samples:
        row = [repr(float(s.t))]
        row += [repr(a) for a in s.angles]
        row += [repr(float(c)) for c in s.coupler_pose.coeffs()]
        row.append(repr(s.closure_residual))
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def samples_to_json(samples: Sequence[ConfigSample]) -> List[Dict[str, Any]]:
    return [
        {
            "t": scalar_to_json(s.t),
            "angles": list(s.angles),
            "axes": [axis_to_json(ax.to_float()) for ax in s.axes],
            "coupler_pose": dq_to_json(s.coupler_pose),
            "closure_residual": s.closure_residual,
        }
        for s in samples
    ]


def dump_json(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"
