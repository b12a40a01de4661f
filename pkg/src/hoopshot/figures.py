"""Builds the basketball figure sequence: the declarative ladder and the
renderer-facing scenes for its seven figures.

The sequence climbs from a court diagram, through concrete trajectories,
to the hoop-reaching solution, the required-velocity curve with its
optimum, and finally the optimum as a function of distance and release
altitude.  Color roles climb with it: black court, red trajectories,
blue solution, green optimum.
"""

from __future__ import annotations

import math
from typing import Sequence

from . import solver
from .kinematics import LaunchState, ShotParams, sample_trajectory
from .ladder import ColorRole, LadderSpec, PlotSpace, Stage, StrategyTag
from .render import (
    Dash,
    Layout,
    Panel,
    Scene,
    Style,
    hline,
    point,
    polyline,
    text,
    vline,
)

DEMO_ANGLE = math.radians(30.0)
DEFAULT_VELOCITIES = (5.0, 10.0, 15.0, 20.0)
DEFAULT_ALTITUDES = (1.2, 1.7, 2.2)
TRAJECTORY_SAMPLES = 200
ANGLE_CURVE_POINTS = 400

BLACK = Style(color_role=ColorRole.BASELINE)
RED = Style(color_role=ColorRole.CONCRETE)
BLUE = Style(color_role=ColorRole.SOLUTION)
GREEN = Style(color_role=ColorRole.OPTIMUM)
BLACK_DASHED = Style(color_role=ColorRole.BASELINE, dash=Dash.DASHED)
GREEN_DOTTED = Style(color_role=ColorRole.OPTIMUM, dash=Dash.DOTTED)


def default_d_grid(lo: float = 1.0, hi: float = 15.0, step: float = 0.1) -> list[float]:
    count = int(round((hi - lo) / step)) + 1
    return [lo + i * step for i in range(count)]


def _court_space(params: ShotParams) -> PlotSpace:
    return PlotSpace(
        x_var=("horizontal position", "m"),
        y_var=("height", "m"),
        x_range=(0.0, params.distance * 1.1),
        y_range=(0.0, 7.0),
        aspect=1.0,
    )


def _angle_space() -> PlotSpace:
    return PlotSpace(
        x_var=("launch angle", "deg"),
        y_var=("required speed", "m/s"),
        x_range=(0.0, 90.0),
        y_range=(0.0, 40.0),
        aspect=1.0,
    )


def _court_marks(params: ShotParams) -> list:
    a, d, h = params.release_altitude, params.distance, params.hoop_height
    x_max = d * 1.1
    return [
        polyline([(0.0, 0.0), (x_max, 0.0)], BLACK),
        polyline([(0.0, 0.0), (0.0, a)], BLACK),
        point(0.0, a, BLACK, size=3.0),
        polyline([(d, 0.0), (d, h)], BLACK),
        polyline([(d - 0.45, h), (d, h)], BLACK),
        text(0.15, a + 0.35, f"a = {a:g} m", BLACK),
        text(d - 2.4, h + 0.35, f"h = {h:g} m", BLACK),
        text(d / 2 - 1.0, 0.45, f"d = {d:g} m", BLACK),
    ]


def _trajectory_mark(params: ShotParams, angle: float, speed: float, style: Style):
    traj = sample_trajectory(
        params, LaunchState(angle=angle, speed=speed), n=TRAJECTORY_SAMPLES
    )
    return polyline([(s.x, s.y) for s in traj.samples], style), traj


def _angle_curve_polyline(params: ShotParams):
    curve = solver.angle_curve(
        params, 0.0, math.radians(89.9), ANGLE_CURVE_POINTS
    )
    pts = [
        (math.degrees(p.angle), p.speed) for p in curve.points if p.feasible
    ]
    return polyline(pts, BLUE)


def build_basketball_ladder(
    params: ShotParams | None = None,
    velocities: Sequence[float] | None = None,
    altitudes: Sequence[float] | None = None,
    d_grid: Sequence[float] | None = None,
) -> tuple[LadderSpec, list[Scene]]:
    """The five-stage ladder and its seven figure scenes.

    Stages: (1) court diagram, (2) one and several trajectories,
    (3) the hoop-reaching trajectory in context, (4) required speed vs
    angle and its minimum, (5) the optimum vs distance, then per
    release altitude.  The returned spec validates with zero violations.
    """
    params = params or ShotParams()
    velocities = tuple(velocities) if velocities else DEFAULT_VELOCITIES
    altitudes = tuple(altitudes) if altitudes else DEFAULT_ALTITUDES
    d_grid = list(d_grid) if d_grid else default_d_grid()

    court_space = _court_space(params)
    angle_space = _angle_space()
    d_theta_space = PlotSpace(
        x_var=("distance", "m"),
        y_var=("optimal angle", "deg"),
        x_range=(d_grid[0], d_grid[-1]),
        y_range=(40.0, 80.0),
        aspect=1.0,
    )
    d_speed_space = PlotSpace(
        x_var=("distance", "m"),
        y_var=("optimal speed", "m/s"),
        x_range=(d_grid[0], d_grid[-1]),
        y_range=(0.0, 14.0),
        aspect=1.0,
    )

    court = _court_marks(params)
    demo_deg = math.degrees(DEMO_ANGLE)

    # stage 2: one concrete shot, then a fan of launch speeds
    one_shot, _ = _trajectory_mark(params, DEMO_ANGLE, 15.0, RED)
    fan = []
    for v in velocities:
        mark, traj = _trajectory_mark(params, DEMO_ANGLE, v, RED)
        end = traj.samples[-1]
        fan.append(mark)
        fan.append(text(end.x + 0.1, end.y + 0.1, f"{v:g}", RED))

    # stage 3: the speed that exactly reaches the hoop
    v_solution = solver.required_velocity(params, DEMO_ANGLE)
    solution_mark, _ = _trajectory_mark(params, DEMO_ANGLE, v_solution, BLUE)

    # stage 4: required speed as a function of angle
    curve_mark = _angle_curve_polyline(params)
    feas_deg = math.degrees(solver.feasibility_angle(params))
    optimum = solver.optimal_angle(params)
    opt_deg = math.degrees(optimum.angle)
    curve_panel_marks = [
        curve_mark,
        vline(feas_deg, BLACK_DASHED),
        point(demo_deg, v_solution, BLUE, size=4.0),
    ]
    optimum_panel_marks = curve_panel_marks + [
        vline(opt_deg, GREEN_DOTTED),
        hline(optimum.speed, GREEN_DOTTED),
        point(opt_deg, optimum.speed, GREEN, size=4.0),
    ]

    # stage 5: optimum as a function of distance, then per altitude
    base_curve = solver.sweep_distance(
        params.release_altitude, params.hoop_height, params.gravity, d_grid
    )
    alt_curves = solver.sweep_altitudes(
        altitudes, params.hoop_height, params.gravity, d_grid
    )

    def theta_marks(curves, labeled):
        marks = []
        for curve in curves:
            pts = [(d, math.degrees(o.angle)) for d, o in curve.entries]
            marks.append(polyline(pts, GREEN))
            if labeled:
                marks.append(
                    text(
                        pts[-1][0] - 1.6,
                        pts[-1][1] + 1.5,
                        f"a = {curve.release_altitude:g}",
                        GREEN,
                    )
                )
        return marks

    def speed_marks(curves, labeled):
        marks = []
        for curve in curves:
            pts = [(d, o.speed) for d, o in curve.entries]
            marks.append(polyline(pts, GREEN))
            if labeled:
                marks.append(
                    text(
                        pts[-1][0] - 1.6,
                        pts[-1][1] - 0.5,
                        f"a = {curve.release_altitude:g}",
                        GREEN,
                    )
                )
        return marks

    stages = (
        Stage(
            id=1,
            panels=(court_space,),
            roles_used=frozenset({ColorRole.BASELINE}),
            tags=frozenset({StrategyTag.DEFINE_ABSTRACT_SPACE}),
            caption=(
                f"A shooter {params.distance:g} m from the hoop, releasing at "
                f"{params.release_altitude:g} m; the hoop is "
                f"{params.hoop_height:g} m high."
            ),
            parent=None,
        ),
        Stage(
            id=2,
            panels=(court_space, court_space),
            roles_used=frozenset({ColorRole.BASELINE, ColorRole.CONCRETE}),
            tags=frozenset({StrategyTag.EXPAND_SAMPLING}),
            caption=(
                f"One shot at {demo_deg:g} deg and 15 m/s misses high; a fan "
                f"of launch speeds brackets the hoop-reaching speed."
            ),
            parent=1,
        ),
        Stage(
            id=3,
            panels=(court_space,),
            roles_used=frozenset(
                {ColorRole.BASELINE, ColorRole.CONCRETE, ColorRole.SOLUTION}
            ),
            tags=frozenset({StrategyTag.MODELED_OR_OPTIMIZED_VALUES}),
            caption=(
                f"The shot at {demo_deg:g} deg reaches the hoop at "
                f"{v_solution:.1f} m/s, shown against the other speeds."
            ),
            parent=2,
        ),
        Stage(
            id=4,
            panels=(angle_space, angle_space),
            roles_used=frozenset(
                {ColorRole.BASELINE, ColorRole.SOLUTION, ColorRole.OPTIMUM}
            ),
            tags=frozenset(
                {
                    StrategyTag.DEFINE_ABSTRACT_SPACE,
                    StrategyTag.MODELED_OR_OPTIMIZED_VALUES,
                    StrategyTag.UNFIX_PARAMETER,
                }
            ),
            caption=(
                f"Required speed as a function of launch angle; it is "
                f"minimized at {opt_deg:.1f} deg, where {optimum.speed:.1f} "
                f"m/s suffices."
            ),
            parent=3,
        ),
        Stage(
            id=5,
            panels=(d_theta_space, d_speed_space),
            roles_used=frozenset({ColorRole.BASELINE, ColorRole.OPTIMUM}),
            tags=frozenset(
                {
                    StrategyTag.UNFIX_PARAMETER,
                    StrategyTag.EXPAND_SAMPLING,
                    StrategyTag.DEFINE_ABSTRACT_SPACE,
                }
            ),
            caption=(
                "Optimal angle and speed as the distance varies, then for "
                "three release altitudes."
            ),
            parent=4,
        ),
    )
    spec = LadderSpec(stages=stages)

    court_labels = ("horizontal position (m)", "height (m)")
    angle_labels = ("launch angle (deg)", "required speed (m/s)")

    scenes = [
        Scene(
            panels=(
                Panel(
                    space=court_space,
                    marks=tuple(court),
                    axis_labels=court_labels,
                    title="The court",
                ),
            ),
            layout=Layout.SINGLE,
        ),
        Scene(
            panels=(
                Panel(
                    space=court_space,
                    marks=tuple(court + [one_shot]),
                    axis_labels=court_labels,
                    title="One shot",
                ),
                Panel(
                    space=court_space,
                    marks=tuple(court + fan),
                    axis_labels=court_labels,
                    title="Several launch speeds",
                ),
            ),
            layout=Layout.SIDE_BY_SIDE,
        ),
        Scene(
            panels=(
                Panel(
                    space=court_space,
                    marks=tuple(court + fan + [solution_mark]),
                    axis_labels=court_labels,
                    title="The hoop-reaching shot",
                ),
            ),
            layout=Layout.SINGLE,
        ),
        Scene(
            panels=(
                Panel(
                    space=angle_space,
                    marks=tuple(curve_panel_marks),
                    axis_labels=angle_labels,
                    title="Required speed vs angle",
                ),
            ),
            layout=Layout.SINGLE,
        ),
        Scene(
            panels=(
                Panel(
                    space=angle_space,
                    marks=tuple(curve_panel_marks),
                    axis_labels=angle_labels,
                    title="Required speed vs angle",
                ),
                Panel(
                    space=angle_space,
                    marks=tuple(optimum_panel_marks),
                    axis_labels=angle_labels,
                    title="The softest shot",
                ),
            ),
            layout=Layout.SIDE_BY_SIDE,
        ),
        Scene(
            panels=(
                Panel(
                    space=d_theta_space,
                    marks=tuple(theta_marks([base_curve], labeled=False)),
                    axis_labels=("distance (m)", "optimal angle (deg)"),
                    title="Optimum vs distance",
                ),
                Panel(
                    space=d_speed_space,
                    marks=tuple(speed_marks([base_curve], labeled=False)),
                    axis_labels=("distance (m)", "optimal speed (m/s)"),
                ),
            ),
            layout=Layout.STACKED_SHARED_X,
        ),
        Scene(
            panels=(
                Panel(
                    space=d_theta_space,
                    marks=tuple(theta_marks(alt_curves, labeled=True)),
                    axis_labels=("distance (m)", "optimal angle (deg)"),
                    title="Optimum vs distance and release altitude",
                ),
                Panel(
                    space=d_speed_space,
                    marks=tuple(speed_marks(alt_curves, labeled=True)),
                    axis_labels=("distance (m)", "optimal speed (m/s)"),
                ),
            ),
            layout=Layout.STACKED_SHARED_X,
        ),
    ]
    return spec, scenes
