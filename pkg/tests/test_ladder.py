import dataclasses

import pytest

from hoopshot.figures import build_basketball_ladder
from hoopshot.ladder import (
    ColorRole,
    LadderSpec,
    PlotSpace,
    Stage,
    StrategyTag,
    ViolationKind,
    ladder_from_json,
    ladder_to_json,
    validate_ladder,
)


def space(name="x", unit="m", x_range=(0.0, 10.0), y_range=(0.0, 5.0)):
    return PlotSpace(
        x_var=(name, unit),
        y_var=("y", "m"),
        x_range=x_range,
        y_range=y_range,
    )


def simple_stage(stage_id, roles, parent=None, panels=None):
    return Stage(
        id=stage_id,
        panels=panels or (space(),),
        roles_used=frozenset(roles),
        tags=frozenset({StrategyTag.EXPAND_SAMPLING}),
        caption=f"stage {stage_id}",
        parent=parent,
    )


@pytest.fixture(scope="module")
def basketball():
    return build_basketball_ladder()


def replace_stage(spec, stage_id, **changes):
    stages = list(spec.stages)
    stages[stage_id - 1] = dataclasses.replace(stages[stage_id - 1], **changes)
    return LadderSpec(stages=tuple(stages))


class TestValidateLadder:
    def test_builtin_basketball_ladder_is_clean(self, basketball):
        spec, _ = basketball
        assert validate_ladder(spec) == []

    def test_shared_space_mismatch(self, basketball):
        spec, _ = basketball
        stage2 = spec.stage(2)
        mutated_panel = dataclasses.replace(stage2.panels[1], y_range=(0.0, 8.0))
        mutated = replace_stage(
            spec, 2, panels=(stage2.panels[0], mutated_panel)
        )
        violations = validate_ladder(mutated)
        assert len(violations) == 1
        assert violations[0].kind is ViolationKind.SHARED_SPACE_MISMATCH

    def test_range_tolerance(self, basketball):
        spec, _ = basketball
        stage2 = spec.stage(2)
        lo, hi = stage2.panels[1].y_range
        nudged = dataclasses.replace(
            stage2.panels[1], y_range=(lo, hi + 1e-12)
        )
        mutated = replace_stage(spec, 2, panels=(stage2.panels[0], nudged))
        assert validate_ladder(mutated) == []

    def test_role_rank_regression(self):
        # green introduced before blue: 0, 1, 3, then 2
        spec = LadderSpec(
            stages=(
                simple_stage(1, {ColorRole.BASELINE}),
                simple_stage(2, {ColorRole.BASELINE, ColorRole.CONCRETE}, parent=1),
                simple_stage(3, {ColorRole.BASELINE, ColorRole.OPTIMUM}, parent=2),
                simple_stage(
                    4,
                    {ColorRole.BASELINE, ColorRole.SOLUTION, ColorRole.OPTIMUM},
                    parent=3,
                ),
            )
        )
        violations = validate_ladder(spec)
        assert len(violations) == 1
        assert violations[0].kind is ViolationKind.ROLE_RANK_REGRESSION
        assert violations[0].stages == (3, 4)

    def test_color_continuity_break(self):
        # stage 3's parent chain skips stage 2, where red was introduced
        spec = LadderSpec(
            stages=(
                simple_stage(1, {ColorRole.BASELINE}),
                simple_stage(2, {ColorRole.BASELINE, ColorRole.CONCRETE}, parent=1),
                simple_stage(3, {ColorRole.BASELINE, ColorRole.CONCRETE}, parent=1),
            )
        )
        violations = validate_ladder(spec)
        assert len(violations) == 1
        assert violations[0].kind is ViolationKind.COLOR_CONTINUITY_BREAK
        assert violations[0].stages == (2, 3)

    def test_broken_parent_order(self, basketball):
        spec, _ = basketball
        mutated = replace_stage(spec, 3, parent=3)
        violations = validate_ladder(mutated)
        assert len(violations) == 1
        assert violations[0].kind is ViolationKind.BROKEN_PARENT_ORDER

    def test_idempotent_and_order_stable(self, basketball):
        spec, _ = basketball
        mutated = replace_stage(spec, 3, parent=3)
        assert validate_ladder(mutated) == validate_ladder(mutated)

    def test_violations_carry_messages(self, basketball):
        spec, _ = basketball
        mutated = replace_stage(spec, 3, parent=3)
        for v in validate_ladder(mutated):
            assert v.message


class TestStructuralInvariants:
    def test_ids_must_be_consecutive(self):
        with pytest.raises(ValueError):
            LadderSpec(stages=(simple_stage(2, {ColorRole.BASELINE}),))

    def test_parent_must_resolve(self):
        with pytest.raises(ValueError):
            LadderSpec(
                stages=(simple_stage(1, {ColorRole.BASELINE}, parent=9),)
            )

    def test_stage_needs_panels_and_caption(self):
        with pytest.raises(ValueError):
            Stage(
                id=1,
                panels=(),
                roles_used=frozenset(),
                tags=frozenset(),
                caption="x",
            )
        with pytest.raises(ValueError):
            Stage(
                id=1,
                panels=(space(),),
                roles_used=frozenset(),
                tags=frozenset(),
                caption="",
            )

    def test_plot_space_invariants(self):
        with pytest.raises(ValueError):
            space(x_range=(3.0, 3.0))
        with pytest.raises(ValueError):
            PlotSpace(
                x_var=("x", "m"),
                y_var=("y", "m"),
                x_range=(0.0, 1.0),
                y_range=(0.0, 1.0),
                aspect=0.0,
            )


class TestJsonRoundTrip:
    def test_lossless(self, basketball):
        spec, _ = basketball
        assert ladder_from_json(ladder_to_json(spec)) == spec

    def test_round_trip_still_validates(self, basketball):
        spec, _ = basketball
        assert validate_ladder(ladder_from_json(ladder_to_json(spec))) == []

    def test_serialization_deterministic(self, basketball):
        spec, _ = basketball
        assert ladder_to_json(spec) == ladder_to_json(spec)
