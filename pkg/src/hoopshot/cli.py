"""Command-line interface.

Angles are degrees at this boundary and radians everywhere inside.
Exit codes: 0 success, 1 domain error (infeasible query, validation
violations), 2 usage or scenario-parse error.

Scenario files are JSON with top-level keys `params` (a, d, h, g),
`velocities`, `altitudes`, `d_grid` (lo, hi, step), and `output`.
Flags override file values; defaults are a=1.7, d=10, h=3.05, g=9.8,
velocities 5/10/15/20, altitudes 1.2/1.7/2.2, d_grid 1..15 step 0.1.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import figures, solver
from .kinematics import LaunchState, ShotParams, VerticalShot, sample_trajectory
from .ladder import ladder_from_json, ladder_to_json, validate_ladder
from .render import export_figures
from .scalarmin import Infeasible

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


@dataclass
class Scenario:
    params: ShotParams = field(default_factory=ShotParams)
    velocities: list[float] = field(
        default_factory=lambda: list(figures.DEFAULT_VELOCITIES)
    )
    altitudes: list[float] = field(
        default_factory=lambda: list(figures.DEFAULT_ALTITUDES)
    )
    d_grid: tuple[float, float, float] = (1.0, 15.0, 0.1)
    output: str = "figures"

    def grid(self) -> list[float]:
        lo, hi, step = self.d_grid
        return figures.default_d_grid(lo, hi, step)


class ScenarioError(ValueError):
    pass


def load_scenario(path: str | None) -> Scenario:
    scenario = Scenario()
    if path is None:
        return scenario
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ScenarioError(f"cannot read scenario file {path}: {exc}") from exc
    try:
        if "params" in doc:
            p = doc["params"]
            scenario.params = ShotParams(
                release_altitude=p.get("a", 1.7),
                distance=p.get("d", 10.0),
                hoop_height=p.get("h", 3.05),
                gravity=p.get("g", 9.8),
            )
        if "velocities" in doc:
            scenario.velocities = [float(v) for v in doc["velocities"]]
        if "altitudes" in doc:
            scenario.altitudes = [float(a) for a in doc["altitudes"]]
        if "d_grid" in doc:
            g = doc["d_grid"]
            step = float(g.get("step", 0.1))
            if step <= 0:
                raise ScenarioError(f"d_grid.step must be positive, got {step}")
            scenario.d_grid = (float(g["lo"]), float(g["hi"]), step)
        if "output" in doc:
            scenario.output = str(doc["output"])
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ScenarioError):
            raise
        raise ScenarioError(f"bad scenario file {path}: {exc}") from exc
    return scenario


def _apply_param_flags(scenario: Scenario, args) -> None:
    p = scenario.params
    scenario.params = ShotParams(
        release_altitude=args.altitude if args.altitude is not None else p.release_altitude,
        distance=args.distance if args.distance is not None else p.distance,
        hoop_height=args.hoop_height if args.hoop_height is not None else p.hoop_height,
        gravity=args.gravity if args.gravity is not None else p.gravity,
    )


def _add_scenario_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--scenario", metavar="FILE", help="scenario JSON file")
    sub.add_argument("--altitude", type=float, help="release altitude, meters")
    sub.add_argument("--distance", type=float, help="distance to hoop, meters")
    sub.add_argument("--hoop-height", type=float, help="hoop height, meters")
    sub.add_argument("--gravity", type=float, help="gravity, m/s^2")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hoopshot",
        description=(
            "Basketball-shot model: trajectories, required launch speed, "
            "optimal angle, sweeps, and the ladder-of-abstraction figures. "
            "Angles are degrees at the CLI, distances meters, speeds m/s."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "trajectory", help="print a sampled trajectory as CSV (t, x, y)"
    )
    _add_scenario_flags(p)
    p.add_argument("--angle", type=float, required=True, help="launch angle, degrees")
    p.add_argument("--speed", type=float, required=True, help="launch speed, m/s")
    p.add_argument("--samples", type=int, default=200, help="number of samples")

    p = sub.add_parser(
        "velocity", help="print the speed required to reach the hoop"
    )
    _add_scenario_flags(p)
    p.add_argument("--angle", type=float, required=True, help="launch angle, degrees")

    p = sub.add_parser(
        "optimize", help="print the optimal angle (degrees) and speed"
    )
    _add_scenario_flags(p)

    p = sub.add_parser(
        "sweep", help="write optimal angle/speed over a distance grid as CSV"
    )
    _add_scenario_flags(p)
    p.add_argument(
        "--altitudes",
        type=float,
        nargs="+",
        help="release altitudes to sweep, meters (default: single altitude)",
    )
    p.add_argument("--out", metavar="FILE", help="CSV output path (default stdout)")

    p = sub.add_parser(
        "figures", help="build, validate, and render the figure ladder"
    )
    _add_scenario_flags(p)
    p.add_argument("--out", metavar="DIR", help="output directory for SVG files")

    p = sub.add_parser(
        "validate-ladder", help="check a ladder spec JSON file for violations"
    )
    p.add_argument("file", metavar="FILE", help="ladder spec JSON file")

    return parser


def _cmd_trajectory(scenario: Scenario, args) -> int:
    launch = LaunchState(angle=math.radians(args.angle), speed=args.speed)
    traj = sample_trajectory(scenario.params, launch, n=args.samples)
    print("t,x,y")
    for s in traj.samples:
        print(f"{s.t:.6f},{s.x:.6f},{s.y:.6f}")
    return EXIT_OK


def _cmd_velocity(scenario: Scenario, args) -> int:
    try:
        v = solver.required_velocity(scenario.params, math.radians(args.angle))
    except Infeasible:
        feas = math.degrees(solver.feasibility_angle(scenario.params))
        print(f"INFEASIBLE: angle {args.angle:g} deg is at or below {feas:.3f} deg")
        return EXIT_DOMAIN
    print(f"v={v:.1f} m/s")
    return EXIT_OK


def _cmd_optimize(scenario: Scenario, args) -> int:
    opt = solver.optimal_angle(scenario.params)
    print(f"theta_opt={math.degrees(opt.angle):.1f} deg, v_opt={opt.speed:.1f} m/s")
    return EXIT_OK


def _cmd_sweep(scenario: Scenario, args) -> int:
    grid = scenario.grid()
    p = scenario.params
    altitudes = args.altitudes if args.altitudes else [p.release_altitude]
    curves = solver.sweep_altitudes(altitudes, p.hoop_height, p.gravity, grid)
    csv_text = solver.sweep_csv(curves)
    if args.out:
        Path(args.out).write_text(csv_text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(csv_text)
    return EXIT_OK


def _cmd_figures(scenario: Scenario, args) -> int:
    out_dir = Path(args.out if args.out else scenario.output)
    spec, scenes = figures.build_basketball_ladder(
        params=scenario.params,
        velocities=scenario.velocities,
        altitudes=scenario.altitudes,
        d_grid=scenario.grid(),
    )
    violations = validate_ladder(spec)
    if violations:
        for v in violations:
            print(f"{v.kind.name}: {v.message}", file=sys.stderr)
        return EXIT_DOMAIN
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = export_figures(scenes, out_dir)
    spec_path = out_dir / "ladder.json"
    spec_path.write_text(ladder_to_json(spec))
    for path in paths:
        print(path)
    print(spec_path)
    return EXIT_OK


def _cmd_validate_ladder(args) -> int:
    try:
        spec = ladder_from_json(Path(args.file).read_text())
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"cannot load ladder spec {args.file}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    violations = validate_ladder(spec)
    print(f"{len(violations)} violations")
    for v in violations:
        print(f"{v.kind.name} (stages {', '.join(map(str, v.stages))}): {v.message}")
    return EXIT_OK if not violations else EXIT_DOMAIN


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    if args.command == "validate-ladder":
        return _cmd_validate_ladder(args)

    try:
        scenario = load_scenario(args.scenario)
        _apply_param_flags(scenario, args)
    except (ScenarioError, ValueError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE

    try:
        if args.command == "trajectory":
            return _cmd_trajectory(scenario, args)
        if args.command == "velocity":
            return _cmd_velocity(scenario, args)
        if args.command == "optimize":
            return _cmd_optimize(scenario, args)
        if args.command == "sweep":
            return _cmd_sweep(scenario, args)
        if args.command == "figures":
            return _cmd_figures(scenario, args)
    except (VerticalShot, Infeasible) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_DOMAIN
    parser.error(f"unknown command {args.command}")
    return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
