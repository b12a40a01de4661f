import math

import pytest
from hypothesis import given, strategies as st

from hoopshot.kinematics import (
    LaunchState,
    ShotParams,
    VerticalShot,
    ground_impact_time,
    height_at_plane,
    position_at,
    sample_trajectory,
    time_to_plane,
)

DEFAULTS = ShotParams()
DEG30 = math.radians(30.0)


class TestPositionAt:
    def test_launch_point(self):
        x, y = position_at(DEFAULTS, LaunchState(DEG30, 15.0), 0.0)
        assert x == 0.0
        assert y == 1.7

    def test_direct_evaluation_at_one_second(self):
        x, y = position_at(DEFAULTS, LaunchState(DEG30, 15.0), 1.0)
        assert x == pytest.approx(12.990381, abs=1e-6)
        assert y == pytest.approx(4.3, abs=1e-6)

    @given(
        angle=st.floats(0.0, 1.4),
        speed=st.floats(0.5, 30.0),
        t=st.floats(0.0, 5.0),
    )
    def test_zero_gravity_straight_line(self, angle, speed, t):
        params = ShotParams(gravity=1e-12)  # gravity must be positive
        x, y = position_at(params, LaunchState(angle, speed), t)
        assert y - params.release_altitude == pytest.approx(
            math.tan(angle) * x, abs=1e-9
        )


class TestTimeToPlane:
    def test_flat_shot(self):
        assert time_to_plane(LaunchState(0.0, 10.0), 10.0) == pytest.approx(1.0)

    def test_angled_shot(self):
        t = time_to_plane(LaunchState(DEG30, 12.2), 10.0)
        assert t == pytest.approx(0.9465, abs=1e-4)

    def test_vertical_shot_rejected(self):
        # LaunchState itself rejects angle >= pi/2, so probe just below
        # where cos underflows past the threshold
        near_vertical = LaunchState(math.pi / 2 - 1e-14, 10.0)
        with pytest.raises(VerticalShot):
            time_to_plane(near_vertical, 10.0)


class TestHeightAtPlane:
    def test_hoop_reaching_speed_hits_hoop(self):
        # 12.153021... is the closed-form hoop-reaching speed at 30 deg
        y = height_at_plane(DEFAULTS, LaunchState(DEG30, 12.153021336394197))
        assert y == pytest.approx(3.05, abs=1e-9)

    def test_fifteen_goes_too_high(self):
        assert height_at_plane(DEFAULTS, LaunchState(DEG30, 15.0)) > 3.05

    def test_flat_shot_from_hoop_height_no_gravity(self):
        params = ShotParams(
            release_altitude=3.05, hoop_height=3.05, gravity=1e-12
        )
        y = height_at_plane(params, LaunchState(0.0, 8.0))
        assert y == pytest.approx(3.05, abs=1e-9)

    @given(v1=st.floats(10.0, 25.0), dv=st.floats(0.01, 5.0))
    def test_strictly_increasing_in_speed(self, v1, dv):
        lo = height_at_plane(DEFAULTS, LaunchState(DEG30, v1))
        hi = height_at_plane(DEFAULTS, LaunchState(DEG30, v1 + dv))
        assert hi > lo


class TestSampleTrajectory:
    def test_two_samples_are_endpoints(self):
        traj = sample_trajectory(DEFAULTS, LaunchState(DEG30, 15.0), n=2)
        assert len(traj.samples) == 2
        assert traj.samples[0].t == 0.0
        assert (traj.samples[0].x, traj.samples[0].y) == (0.0, 1.7)

    def test_clipping_contract(self):
        traj = sample_trajectory(DEFAULTS, LaunchState(DEG30, 15.0), n=100)
        last = traj.samples[-1]
        assert last.x <= 10.0 + 1e-9
        assert last.y >= -1e-9

    def test_samples_reproduce_position_at_exactly(self):
        launch = LaunchState(DEG30, 15.0)
        traj = sample_trajectory(DEFAULTS, launch, n=50)
        for s in traj.samples:
            assert position_at(DEFAULTS, launch, s.t) == (s.x, s.y)

    def test_too_few_samples_rejected(self):
        with pytest.raises(ValueError):
            sample_trajectory(DEFAULTS, LaunchState(DEG30, 15.0), n=1)

    @given(
        angle=st.floats(0.05, 1.4),
        speed=st.floats(1.0, 30.0),
    )
    def test_x_strictly_increasing(self, angle, speed):
        traj = sample_trajectory(DEFAULTS, LaunchState(angle, speed), n=40)
        xs = [s.x for s in traj.samples]
        assert all(b > a for a, b in zip(xs, xs[1:]))

    @given(
        angle=st.floats(0.05, 1.4),
        speed=st.floats(1.0, 30.0),
    )
    def test_energy_conserved_along_trajectory(self, angle, speed):
        launch = LaunchState(angle, speed)
        traj = sample_trajectory(DEFAULTS, launch, n=30)
        g = DEFAULTS.gravity

        def energy(s):
            vy = speed * math.sin(angle) - g * s.t
            return vy * vy + 2.0 * g * s.y

        e0 = energy(traj.samples[0])
        for s in traj.samples:
            assert energy(s) == pytest.approx(e0, rel=1e-9)

    def test_ground_impact_is_larger_root(self):
        launch = LaunchState(DEG30, 5.0)
        t = ground_impact_time(DEFAULTS, launch)
        _, y = position_at(DEFAULTS, launch, t)
        assert y == pytest.approx(0.0, abs=1e-9)
        assert t > launch.speed * math.sin(DEG30) / DEFAULTS.gravity


class TestValidation:
    def test_bad_params(self):
        with pytest.raises(ValueError):
            ShotParams(distance=0.0)
        with pytest.raises(ValueError):
            ShotParams(gravity=-1.0)
        with pytest.raises(ValueError):
            ShotParams(release_altitude=-0.1)

    def test_bad_launch(self):
        with pytest.raises(ValueError):
            LaunchState(math.pi / 2, 10.0)
        with pytest.raises(ValueError):
            LaunchState(0.5, 0.0)
