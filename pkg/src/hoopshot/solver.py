"""Required launch velocity, feasibility boundary, optimal angle, sweeps.

The hoop-reaching speed for a given angle has the closed form

    v = sqrt(0.5*g*d^2 / (cos(theta)^2 * (d*tan(theta) + a - h)))

which is defined only above the feasibility angle atan((h-a)/d); at or
below it the ball passes under the hoop no matter how hard it is thrown.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass
from typing import Sequence

from .kinematics import ShotParams
from .scalarmin import Bracket, Infeasible, minimize_scalar

OPT_BRACKET_HI = math.radians(89.9)
OPT_BRACKET_MARGIN = 1e-6
OPT_TOL = 1e-9


class InfeasibleAngle(Infeasible):
    """No finite speed reaches the hoop at this angle."""


@dataclass(frozen=True)
class VelocityRequirement:
    """Required speed at one angle; speed is None when infeasible."""

    angle: float
    speed: float | None

    @property
    def feasible(self) -> bool:
        return self.speed is not None


@dataclass(frozen=True)
class AngleCurve:
    params: ShotParams
    points: tuple[VelocityRequirement, ...]


@dataclass(frozen=True)
class Optimum:
    """Angle minimizing the required speed, and that minimal speed."""

    angle: float
    speed: float


@dataclass(frozen=True)
class OptimumCurve:
    release_altitude: float
    entries: tuple[tuple[float, Optimum], ...]


def required_velocity(params: ShotParams, angle: float) -> float:
    """Initial speed for which the ball's height at the hoop plane equals
    the hoop height.  Raises InfeasibleAngle at or below the feasibility
    angle, where the denominator of the closed form is non-positive."""
    if not angle < math.pi / 2:
        raise ValueError(f"angle must be below pi/2, got {angle}")
    a, d, h, g = (
        params.release_altitude,
        params.distance,
        params.hoop_height,
        params.gravity,
    )
    c = math.cos(angle)
    denom = c * c * (d * math.tan(angle) + a - h)
    if denom <= 0:
        raise InfeasibleAngle(
            f"angle {math.degrees(angle):.3f} deg is at or below the "
            f"feasibility angle {math.degrees(feasibility_angle(params)):.3f} deg"
        )
    return math.sqrt(0.5 * g * d * d / denom)


def feasibility_angle(params: ShotParams) -> float:
    """atan((h-a)/d); negative when releasing above the hoop."""
    return math.atan(
        (params.hoop_height - params.release_altitude) / params.distance
    )


def angle_curve(
    params: ShotParams, angle_lo: float, angle_hi: float, n: int
) -> AngleCurve:
    """Required velocity on an even angle grid.  Infeasible grid points
    are carried as markers, not dropped, so the curve can render the
    infeasible region."""
    if not angle_lo < angle_hi:
        raise ValueError(f"need angle_lo < angle_hi, got {angle_lo}, {angle_hi}")
    if n < 2:
        raise ValueError(f"need at least 2 grid points, got {n}")
    points = []
    for i in range(n):
        angle = angle_lo + (angle_hi - angle_lo) * i / (n - 1)
        try:
            speed: float | None = required_velocity(params, angle)
        except InfeasibleAngle:
            speed = None
        points.append(VelocityRequirement(angle=angle, speed=speed))
    return AngleCurve(params=params, points=tuple(points))


def optimal_angle(params: ShotParams) -> Optimum:
    """Angle requiring the softest hoop-reaching shot.

    The required velocity diverges at both bracket ends (feasibility
    angle and the vertical), so the minimum is interior and a bracketed
    search applies directly.
    """
    bracket = Bracket(feasibility_angle(params) + OPT_BRACKET_MARGIN, OPT_BRACKET_HI)
    result = minimize_scalar(
        lambda angle: required_velocity(params, angle), bracket, tol=OPT_TOL
    )
    return Optimum(angle=result.x, speed=required_velocity(params, result.x))


def sweep_distance(
    release_altitude: float,
    hoop_height: float,
    gravity: float,
    d_grid: Sequence[float],
) -> OptimumCurve:
    """Optimal angle and speed at each distance in d_grid."""
    if any(d <= 0 for d in d_grid):
        raise ValueError("all distances must be positive")
    if any(b <= a for a, b in zip(d_grid, d_grid[1:])):
        raise ValueError("d_grid must be strictly increasing")
    entries = []
    for d in d_grid:
        params = ShotParams(
            release_altitude=release_altitude,
            distance=d,
            hoop_height=hoop_height,
            gravity=gravity,
        )
        entries.append((d, optimal_angle(params)))
    return OptimumCurve(release_altitude=release_altitude, entries=tuple(entries))


def sweep_altitudes(
    altitudes: Sequence[float],
    hoop_height: float,
    gravity: float,
    d_grid: Sequence[float],
) -> list[OptimumCurve]:
    """One distance sweep per release altitude, all on the same d_grid."""
    return [
        sweep_distance(alt, hoop_height, gravity, d_grid) for alt in altitudes
    ]


def sweep_csv(curves: Sequence[OptimumCurve]) -> str:
    """CSV export: d,theta_opt_deg,v_opt,altitude with 6 decimal places."""
    out = io.StringIO()
    out.write("d,theta_opt_deg,v_opt,altitude\n")
    for curve in curves:
        for d, opt in curve.entries:
            out.write(
                f"{d:.6f},{math.degrees(opt.angle):.6f},"
                f"{opt.speed:.6f},{curve.release_altitude:.6f}\n"
            )
    return out.getvalue()
