"""Basketball-shot model and ladder-of-abstraction figure builder.

Computes trajectories, the speed required to reach the hoop at a given
angle, the angle minimizing that speed, and parameter sweeps; encodes
the accompanying figure sequence as a validated ladder spec and renders
it to deterministic SVG.
"""

from .kinematics import (
    LaunchState,
    ShotParams,
    Trajectory,
    TrajectorySample,
    VerticalShot,
    height_at_plane,
    position_at,
    sample_trajectory,
    time_to_plane,
)
from .solver import (
    AngleCurve,
    InfeasibleAngle,
    Optimum,
    OptimumCurve,
    VelocityRequirement,
    angle_curve,
    feasibility_angle,
    optimal_angle,
    required_velocity,
    sweep_altitudes,
    sweep_csv,
    sweep_distance,
)
from .scalarmin import (
    AllInfeasible,
    Bracket,
    Infeasible,
    InvalidBracket,
    MinResult,
    NonFiniteObjective,
    grid_scan,
    minimize_scalar,
)
from .ladder import (
    ColorRole,
    LadderSpec,
    PlotSpace,
    Stage,
    StrategyTag,
    Violation,
    ViolationKind,
    ladder_from_json,
    ladder_to_json,
    validate_ladder,
)
from .figures import build_basketball_ladder
from .render import (
    LayoutError,
    LinearScale,
    Mark,
    Panel,
    Scene,
    Style,
    export_figures,
    render_svg,
    scale_map,
)

__version__ = "0.1.0"
