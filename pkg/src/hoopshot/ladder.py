"""Declarative model of a figure sequence as rungs on a ladder of
abstraction, with machine-checked consistency rules.

Rules enforced by validate_ladder:

R1  Panels drawn in the same plot space (same x/y variable identities)
    must agree on axis ranges and aspect ratio.
R2  A color role reused by a stage must have been introduced somewhere
    in that stage's parent chain: color continuity flows through
    parentage.
R3  The ranks of newly introduced color roles are non-decreasing along
    the stage order: colors climb, they never fall back.
R4  A stage's parent must come before it.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterable

RANGE_TOL = 1e-9


class ColorRole(enum.Enum):
    """Semantic color assignments, ranked from concrete to abstract."""

    BASELINE = 0  # black: court, axes
    CONCRETE = 1  # red: directly drawn trajectories
    SOLUTION = 2  # blue: the hoop-reaching solution
    OPTIMUM = 3  # green: the minimized solution

    @property
    def rank(self) -> int:
        return self.value


class StrategyTag(enum.Enum):
    DEFINE_ABSTRACT_SPACE = "define_abstract_space"
    MODELED_OR_OPTIMIZED_VALUES = "modeled_or_optimized_values"
    STATISTICAL_AVERAGES = "statistical_averages"
    EXPAND_YEARS = "expand_years"
    EXPAND_SAMPLING = "expand_sampling"
    DEFINE_SUBGROUPS = "define_subgroups"
    UNFIX_PARAMETER = "unfix_parameter"


class ViolationKind(enum.Enum):
    SHARED_SPACE_MISMATCH = "shared_space_mismatch"
    COLOR_CONTINUITY_BREAK = "color_continuity_break"
    ROLE_RANK_REGRESSION = "role_rank_regression"
    BROKEN_PARENT_ORDER = "broken_parent_order"


@dataclass(frozen=True)
class PlotSpace:
    """Axis variables (name, unit), their ranges, and the aspect ratio
    (y data-units per pixel over x data-units per pixel)."""

    x_var: tuple[str, str]
    y_var: tuple[str, str]
    x_range: tuple[float, float]
    y_range: tuple[float, float]
    aspect: float = 1.0

    def __post_init__(self) -> None:
        if not self.x_range[0] < self.x_range[1]:
            raise ValueError(f"bad x_range {self.x_range}")
        if not self.y_range[0] < self.y_range[1]:
            raise ValueError(f"bad y_range {self.y_range}")
        if self.aspect <= 0:
            raise ValueError(f"aspect must be positive, got {self.aspect}")

    @property
    def identity(self) -> tuple[tuple[str, str], tuple[str, str]]:
        return (self.x_var, self.y_var)


@dataclass(frozen=True)
class Stage:
    id: int
    panels: tuple[PlotSpace, ...]
    roles_used: frozenset[ColorRole]
    tags: frozenset[StrategyTag]
    caption: str
    parent: int | None = None

    def __post_init__(self) -> None:
        if not self.panels:
            raise ValueError(f"stage {self.id} has no panels")
        if not self.caption:
            raise ValueError(f"stage {self.id} has no caption")


@dataclass(frozen=True)
class LadderSpec:
    stages: tuple[Stage, ...]

    def __post_init__(self) -> None:
        ids = [s.id for s in self.stages]
        if ids != list(range(1, len(ids) + 1)):
            raise ValueError(f"stage ids must be consecutive from 1, got {ids}")
        for s in self.stages:
            if s.parent is not None and s.parent not in ids:
                raise ValueError(
                    f"stage {s.id} references unknown parent {s.parent}"
                )

    def stage(self, stage_id: int) -> Stage:
        return self.stages[stage_id - 1]


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    stages: tuple[int, ...]
    message: str


def _parent_chain(spec: LadderSpec, stage: Stage) -> list[Stage]:
    """Ancestors of stage, nearest first.  Guards against cycles that a
    broken parent order could create."""
    chain = []
    seen = {stage.id}
    current = stage.parent
    while current is not None and current not in seen:
        seen.add(current)
        ancestor = spec.stage(current)
        chain.append(ancestor)
        current = ancestor.parent
    return chain


def _check_shared_spaces(spec: LadderSpec) -> Iterable[Violation]:
    # One violation per inconsistent space group, so a single mutated
    # range yields exactly one violation no matter how many panels share
    # the space.
    groups: dict[tuple, list[tuple[int, PlotSpace]]] = {}
    for stage in spec.stages:
        for panel in stage.panels:
            groups.setdefault(panel.identity, []).append((stage.id, panel))
    for identity, members in groups.items():
        _, reference = members[0]
        mismatched = [
            sid
            for sid, panel in members[1:]
            if (
                abs(panel.x_range[0] - reference.x_range[0]) > RANGE_TOL
                or abs(panel.x_range[1] - reference.x_range[1]) > RANGE_TOL
                or abs(panel.y_range[0] - reference.y_range[0]) > RANGE_TOL
                or abs(panel.y_range[1] - reference.y_range[1]) > RANGE_TOL
                or abs(panel.aspect - reference.aspect) > RANGE_TOL
            )
        ]
        if mismatched:
            involved = tuple(sorted({members[0][0], *mismatched}))
            yield Violation(
                kind=ViolationKind.SHARED_SPACE_MISMATCH,
                stages=involved,
                message=(
                    f"panels sharing space {identity} disagree on ranges or "
                    f"aspect across stages {involved}"
                ),
            )


def _first_introductions(spec: LadderSpec) -> dict[ColorRole, int]:
    intro: dict[ColorRole, int] = {}
    for stage in spec.stages:
        for role in stage.roles_used:
            intro.setdefault(role, stage.id)
    return intro


def _check_color_continuity(spec: LadderSpec) -> Iterable[Violation]:
    intro = _first_introductions(spec)
    for stage in spec.stages:
        if stage.parent is not None and stage.parent >= stage.id:
            # parentage is broken (reported by R4); a continuity check
            # against a meaningless chain would only cascade noise
            continue
        chain_roles: set[ColorRole] = set()
        for ancestor in _parent_chain(spec, stage):
            chain_roles |= ancestor.roles_used
        for role in sorted(stage.roles_used, key=lambda r: r.rank):
            if intro[role] != stage.id and role not in chain_roles:
                yield Violation(
                    kind=ViolationKind.COLOR_CONTINUITY_BREAK,
                    stages=(intro[role], stage.id),
                    message=(
                        f"stage {stage.id} reuses {role.name} introduced in "
                        f"stage {intro[role]}, which is not in its parent chain"
                    ),
                )


def _check_role_ranks(spec: LadderSpec) -> Iterable[Violation]:
    intro = _first_introductions(spec)
    last_rank = -1
    last_stage = None
    for stage in spec.stages:
        new_ranks = [r.rank for r in stage.roles_used if intro[r] == stage.id]
        if not new_ranks:
            continue
        rank = min(new_ranks)
        if rank < last_rank:
            yield Violation(
                kind=ViolationKind.ROLE_RANK_REGRESSION,
                stages=(last_stage, stage.id),
                message=(
                    f"stage {stage.id} introduces a role of rank {rank} after "
                    f"stage {last_stage} introduced rank {last_rank}"
                ),
            )
        last_rank = max(last_rank, rank)
        last_stage = stage.id


def _check_parent_order(spec: LadderSpec) -> Iterable[Violation]:
    for stage in spec.stages:
        if stage.parent is not None and stage.parent >= stage.id:
            yield Violation(
                kind=ViolationKind.BROKEN_PARENT_ORDER,
                stages=(stage.id,),
                message=(
                    f"stage {stage.id} has parent {stage.parent}, which does "
                    f"not precede it"
                ),
            )


def validate_ladder(spec: LadderSpec) -> list[Violation]:
    """All rule violations, in a deterministic order (R1, R2, R3, R4,
    each in stage order).  An empty list means the ladder is valid."""
    violations: list[Violation] = []
    violations.extend(_check_shared_spaces(spec))
    violations.extend(_check_color_continuity(spec))
    violations.extend(_check_role_ranks(spec))
    violations.extend(_check_parent_order(spec))
    return violations


# --- JSON serialization ------------------------------------------------

def _space_to_dict(space: PlotSpace) -> dict:
    return {
        "x_var": list(space.x_var),
        "y_var": list(space.y_var),
        "x_range": list(space.x_range),
        "y_range": list(space.y_range),
        "aspect": space.aspect,
    }


def _space_from_dict(data: dict) -> PlotSpace:
    return PlotSpace(
        x_var=tuple(data["x_var"]),
        y_var=tuple(data["y_var"]),
        x_range=tuple(data["x_range"]),
        y_range=tuple(data["y_range"]),
        aspect=data["aspect"],
    )


def ladder_to_json(spec: LadderSpec) -> str:
    """Lossless JSON form of a LadderSpec."""
    doc = {
        "stages": [
            {
                "id": stage.id,
                "panels": [_space_to_dict(p) for p in stage.panels],
                "roles_used": sorted(r.name for r in stage.roles_used),
                "tags": sorted(t.name for t in stage.tags),
                "caption": stage.caption,
                "parent": stage.parent,
            }
            for stage in spec.stages
        ]
    }
    return json.dumps(doc, indent=2, sort_keys=True)


def ladder_from_json(text: str) -> LadderSpec:
    doc = json.loads(text)
    stages = []
    for item in doc["stages"]:
        stages.append(
            Stage(
                id=item["id"],
                panels=tuple(_space_from_dict(p) for p in item["panels"]),
                roles_used=frozenset(ColorRole[n] for n in item["roles_used"]),
                tags=frozenset(StrategyTag[n] for n in item["tags"]),
                caption=item["caption"],
                parent=item["parent"],
            )
        )
    return LadderSpec(stages=tuple(stages))
