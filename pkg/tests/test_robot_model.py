from pathlib import Path

import numpy as np
import pytest

from core_math import det3, is_orthogonal
from robot_model import (A1, A2, A3, A4, A5, A6, PLATFORM_TARGETS, MassProperties, RobotGeometry, build_model,
                         default_model, inertia_from_geometry, leg_frames, load_model, platform_target_frames,
                         zero_pose_platform_frame)
from utils import UnknownLeg

CONFIG_DIR = Path(__file__).resolve().parents[1] / "configs"


def test_default_model_reference_values(model):
    assert model.geometry.l3 == 0.85
    assert model.geometry.l4 == 0.08
    assert model.masses.m5 == 15.0
    assert model.masses.m4 == model.masses.m2
    assert model.masses.m6 == model.masses.m3
    assert model.masses.g == 9.81
    np.testing.assert_array_equal(model.gravity, [0.0, 0.0, -9.81])


def test_inertia_from_geometry(model):
    tensors = inertia_from_geometry(model.geometry, {"m2": 0.2, "m3": 2.5, "m4": 0.2, "m5": 15.0})
    bar = 2.5 * 0.85 ** 2 / 3.0
    rod = 0.2 * 0.08 ** 2 / 12.0
    np.testing.assert_allclose(tensors["J3"], np.diag([bar, 0.0, bar]))
    np.testing.assert_allclose(tensors["J2"], np.diag([rod, rod, 0.0]))
    np.testing.assert_allclose(tensors["J4"], np.diag([0.0, rod, rod]))
    np.testing.assert_allclose(tensors["JG"], 0.1 * np.eye(3))
    for tensor in tensors.values():
        assert np.all(np.linalg.eigvalsh(tensor) >= 0.0)


def test_constant_matrices_are_orthogonal():
    for m in (A1, A2, A3, A4, A5, A6, *PLATFORM_TARGETS.values()):
        assert is_orthogonal(m)
        assert abs(det3(m)) == pytest.approx(1.0)


def test_zero_pose_chain_reaches_platform_frame():
    targets = platform_target_frames()
    for leg in "ABC":
        np.testing.assert_allclose(zero_pose_platform_frame(leg), targets[leg], atol=1e-15)


def test_leg_frames():
    frames = leg_frames("B")
    np.testing.assert_array_equal(frames.base, A5)
    np.testing.assert_allclose(frames.r43, [0.0, -0.85, 0.0])
    np.testing.assert_allclose(frames.r21, [0.0, 0.15 * np.sin(np.pi / 4), 0.15 * np.cos(np.pi / 4)])
    np.testing.assert_allclose(frames.r5g, [0.15 * np.sin(np.pi / 4), -0.1, 0.0])
    assert frames.offset(6)[2] == pytest.approx(0.04)
    with pytest.raises(UnknownLeg):
        leg_frames("D")


def test_moved_inertias_keep_their_central_part(model):
    np.testing.assert_allclose(model.body(4).central_inertia(), model.masses.J4, atol=1e-15)
    np.testing.assert_allclose(model.body(5).central_inertia(), model.masses.JG, atol=1e-14)
    np.testing.assert_array_equal(model.body(1).inertia, np.zeros((3, 3)))
    with pytest.raises(ValueError):
        model.body(7)


def test_scaled_and_gravity_switch(model):
    heavy = model.scaled(2.0)
    assert heavy.masses.m5 == 30.0
    np.testing.assert_allclose(heavy.masses.J3, 2.0 * model.masses.J3)
    assert model.with_gravity(g=0.0).masses.g == 0.0
    np.testing.assert_array_equal(model.with_gravity(g_dir=(0, 0, 1)).masses.g_dir, [0.0, 0.0, 1.0])


def test_parameter_validation(model):
    with pytest.raises(ValueError):
        RobotGeometry(l=0.2, l1=0.15, l2=0.08, l3=-0.85, alpha=0.0)
    with pytest.raises(ValueError):
        build_model({"m3": 0.0, "m6": 0.0})
    with pytest.raises(ValueError):
        build_model({"m4": 0.3})
    with pytest.raises(ValueError):
        build_model({"mass": 1.0})
    masses = model.masses
    with pytest.raises(ValueError):
        MassProperties(masses.m1, masses.m2, masses.m3, masses.m4, masses.m5, masses.m6, masses.J2,
                       masses.J3, masses.J4, masses.JG, g_dir=np.array([0.0, 0.0, -2.0]))


def test_shipped_configs():
    reference = load_model(CONFIG_DIR / "default.cfg")
    assert reference.geometry == default_model().geometry
    assert reference.masses.m5 == 15.0
    assert load_model(CONFIG_DIR / "heavy_platform.cfg").masses.m5 == 25.0
    assert load_model(CONFIG_DIR / "zero_gravity.cfg").masses.g == 0.0


def test_load_model_errors(tmp_path):
    path = tmp_path / "robot.cfg"
    path.write_text("l3 = 0.9  # longer bars\n\nm5 = 20\n")
    model = load_model(path)
    assert model.geometry.l3 == 0.9
    assert model.masses.m5 == 20.0

    path.write_text("l3 0.9\n")
    with pytest.raises(ValueError, match="key=value"):
        load_model(path)
    path.write_text("l3 = long\n")
    with pytest.raises(ValueError, match="not a number"):
        load_model(path)


def test_leg_bases_and_target_frames():
    np.testing.assert_array_equal(leg_frames("A").base, [[0, 0, -1], [0, 1, 0], [1, 0, 0]])
    np.testing.assert_array_equal(leg_frames("C").base, [[0, -1, 0], [1, 0, 0], [0, 0, 1]])
    targets = platform_target_frames()
    np.testing.assert_array_equal(targets["A"], [[0, -1, 0], [-1, 0, 0], [0, 0, -1]])
    np.testing.assert_array_equal(targets["B"] @ targets["B"].T, np.eye(3))


def test_tied_masses_follow_their_partner(tmp_path):
    path = tmp_path / "robot.cfg"
    path.write_text("m2 = 0.3\nm3 = 3.0\n")
    model = load_model(path)
    assert model.masses.m4 == 0.3
    assert model.masses.m6 == 3.0
    assert build_model({"m2": 0.3, "m4": 0.3}).masses.m4 == 0.3
    with pytest.raises(ValueError, match="m4 == m2"):
        build_model({"m2": 0.3, "m4": 0.2})
