"""Projectile kinematics for a single basketball shot.

All angles are radians internally; degrees appear only at the CLI
boundary.  Everything here is pure and deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

COS_EPS = 1e-12


class VerticalShot(ValueError):
    """The launch angle is (numerically) vertical: the ball never
    advances toward the hoop plane."""


@dataclass(frozen=True)
class ShotParams:
    """Fixed scenario geometry and physics.

    release_altitude: height of the release point above the ground, m
    distance: horizontal distance to the hoop plane, m
    hoop_height: height of the hoop above the ground, m
    gravity: gravitational acceleration, m/s^2
    """

    release_altitude: float = 1.7
    distance: float = 10.0
    hoop_height: float = 3.05
    gravity: float = 9.8

    def __post_init__(self) -> None:
        if self.distance <= 0:
            raise ValueError(f"distance must be positive, got {self.distance}")
        if self.gravity <= 0:
            raise ValueError(f"gravity must be positive, got {self.gravity}")
        if self.release_altitude < 0:
            raise ValueError(
                f"release_altitude must be non-negative, got {self.release_altitude}"
            )
        if self.hoop_height < 0:
            raise ValueError(
                f"hoop_height must be non-negative, got {self.hoop_height}"
            )


@dataclass(frozen=True)
class LaunchState:
    """Controllable shot inputs: launch angle (radians) and speed (m/s)."""

    angle: float
    speed: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.angle < math.pi / 2:
            raise ValueError(f"angle must be in [0, pi/2), got {self.angle}")
        if self.speed <= 0:
            raise ValueError(f"speed must be positive, got {self.speed}")


@dataclass(frozen=True)
class TrajectorySample:
    t: float
    x: float
    y: float


@dataclass(frozen=True)
class Trajectory:
    params: ShotParams
    launch: LaunchState
    samples: tuple[TrajectorySample, ...]


def position_at(
    params: ShotParams, launch: LaunchState, t: float
) -> tuple[float, float]:
    """Ball position at time t, ignoring air resistance.

    x = v*cos(angle)*t, y = a + v*sin(angle)*t - 0.5*g*t^2.
    """
    x = launch.speed * math.cos(launch.angle) * t
    y = (
        params.release_altitude
        + launch.speed * math.sin(launch.angle) * t
        - 0.5 * params.gravity * t * t
    )
    return x, y


def time_to_plane(launch: LaunchState, distance: float) -> float:
    """Time at which the ball crosses the vertical hoop plane at x = distance."""
    c = math.cos(launch.angle)
    if c <= COS_EPS:
        raise VerticalShot(
            f"cos(angle)={c:.3e} below threshold; shot never reaches the plane"
        )
    return distance / (launch.speed * c)


def height_at_plane(params: ShotParams, launch: LaunchState) -> float:
    """Ball height when it crosses the hoop plane.

    Equals the hoop height exactly when the launch speed is the
    hoop-reaching solution for this angle.
    """
    t = time_to_plane(launch, params.distance)
    return position_at(params, launch, t)[1]


def ground_impact_time(params: ShotParams, launch: LaunchState) -> float:
    """Larger root of y(t) = 0: when the ball would hit the ground."""
    vy = launch.speed * math.sin(launch.angle)
    g = params.gravity
    return (vy + math.sqrt(vy * vy + 2.0 * g * params.release_altitude)) / g


def sample_trajectory(
    params: ShotParams, launch: LaunchState, n: int = 200
) -> Trajectory:
    """Sample the trajectory at n equally spaced times.

    Runs from t=0 to the earlier of the hoop-plane crossing and ground
    impact, so the drawn path stops at the plane or the floor.
    """
    if n < 2:
        raise ValueError(f"need at least 2 samples, got {n}")
    t_end = min(time_to_plane(launch, params.distance), ground_impact_time(params, launch))
    samples = []
    for i in range(n):
        t = t_end * i / (n - 1)
        x, y = position_at(params, launch, t)
        samples.append(TrajectorySample(t=t, x=x, y=y))
    return Trajectory(params=params, launch=launch, samples=tuple(samples))
