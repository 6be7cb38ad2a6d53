import numpy as np
import pytest

from constants import LEGS
from core_math import U1, U3
from dynamics import (Wrench, accumulate_wrenches, actuator_powers, chain_bodies, chain_children, gravity_wrench,
                      inertia_wrench, inverse_dynamics)
from oracles.static_force import static_force_oracle, static_platform
from orthoglide_state import LinkKinematics, PlatformState
from robot_model import BodyProperties


def body_state(omega=(0, 0, 0), eps=(0, 0, 0), gamma=(0, 0, 0)):
    return LinkKinematics(a_k0=np.eye(3), p=np.zeros(3), omega=np.array(omega, dtype=float),
                          eps=np.array(eps, dtype=float), v=np.zeros(3), gamma=np.array(gamma, dtype=float))


PROPS = BodyProperties(mass=2.0, r_c=np.array([0.1, -0.2, 0.05]), inertia=np.diag([0.3, 0.2, 0.1]))


def test_static_body_has_no_inertia_wrench():
    w = inertia_wrench(body_state(), PROPS)
    np.testing.assert_array_equal(w.f, 0.0)
    np.testing.assert_array_equal(w.m, 0.0)


def test_translating_body_is_a_point_mass():
    w = inertia_wrench(body_state(gamma=9.81 * U3), PROPS)
    np.testing.assert_allclose(w.f, -2.0 * 9.81 * U3)
    np.testing.assert_allclose(w.m, -2.0 * np.cross(PROPS.r_c, 9.81 * U3))


def test_principal_axis_spin_has_no_gyroscopic_moment():
    centred = BodyProperties(mass=2.0, r_c=np.zeros(3), inertia=np.diag([0.3, 0.2, 0.1]))
    w = inertia_wrench(body_state(omega=4.0 * U3), centred)
    np.testing.assert_allclose(w.m, 0.0, atol=1e-15)


def test_gravity_wrench(model, rng):
    unit = BodyProperties(mass=1.0, r_c=np.zeros(3), inertia=np.zeros((3, 3)))
    w = gravity_wrench(np.eye(3), unit, model)
    np.testing.assert_allclose(w.f, [0.0, 0.0, -9.81])
    massless = BodyProperties(mass=0.0, r_c=PROPS.r_c, inertia=np.zeros((3, 3)))
    np.testing.assert_array_equal(gravity_wrench(np.eye(3), massless, model).f, 0.0)
    q, _ = np.linalg.qr(rng.normal(size=(3, 3)))
    assert np.linalg.norm(gravity_wrench(q, PROPS, model).f) == pytest.approx(2.0 * 9.81)


def test_accumulate_zero_and_single_body():
    zero = accumulate_wrenches({1: ()}, {1: Wrench.zero()}, {}, {})
    np.testing.assert_array_equal(zero[1].f, 0.0)
    own = Wrench(np.array([1.0, 2.0, 3.0]), np.array([0.5, 0.0, 0.0]))
    single = accumulate_wrenches({1: ()}, {1: own}, {}, {})
    np.testing.assert_array_equal(single[1].f, own.f)
    np.testing.assert_array_equal(single[1].m, own.m)


def test_accumulate_two_bodies():
    r = np.array([0.0, 0.3, 0.0])
    a = np.array([[0.0, 1.0, 0.0], [-1.0, 0.0, 0.0], [0.0, 0.0, 1.0]])
    f2 = Wrench(U1.copy(), np.zeros(3))
    acc = accumulate_wrenches({1: (2,), 2: ()}, {1: Wrench.zero(), 2: f2}, {2: a}, {2: r})
    carried = a.T @ U1
    np.testing.assert_allclose(acc[1].f, carried)
    np.testing.assert_allclose(acc[1].m, np.cross(r, carried))


def test_chain_topology():
    assert chain_bodies("A") == (1, 2, 3, 4, 5, 6)
    assert chain_bodies("B") == (1, 2, 3, 4, 6)
    assert chain_children("A")[4] == (5,)
    assert chain_children("C")[4] == ()
    assert chain_children("B")[2] == (3, 6)


def test_actuator_powers():
    np.testing.assert_array_equal(actuator_powers([10.0, -3.0, 7.0], [0.2, 0.0, 0.0]), [2.0, 0.0, 0.0])


def test_weightless_robot_at_rest_needs_no_force(weightless):
    result = inverse_dynamics(PlatformState(r=np.zeros(3)), weightless)
    np.testing.assert_allclose(result.forces, 0.0, atol=1e-15)


def test_static_forces_match_potential_energy(model):
    for r in (np.zeros(3), np.array([0.05, -0.08, 0.1])):
        forces = inverse_dynamics(static_platform(r), model).forces
        np.testing.assert_allclose(forces, static_force_oracle(r, model), atol=1e-6)


def test_rest_start_of_trajectory_draws_no_power(model, trajectory):
    result = inverse_dynamics(trajectory.state(0.0), model)
    np.testing.assert_array_equal(result.powers, 0.0)


def test_power_is_force_times_rate(model, trajectory):
    result = inverse_dynamics(trajectory.state(1.3), model)
    np.testing.assert_array_equal(result.powers, result.forces * result.rates)
    for i, output in enumerate(result.actuators()):
        assert output.leg == LEGS[i]
        assert output.power == output.force * output.lam_dot


def test_forces_scale_with_inertial_parameters(weightless, trajectory):
    platform = trajectory.state(0.7)
    single = inverse_dynamics(platform, weightless).forces
    double = inverse_dynamics(platform, weightless.scaled(2.0)).forces
    np.testing.assert_allclose(double, 2.0 * single, rtol=1e-12, atol=1e-12)
    assert np.max(np.abs(single)) > 0.0
