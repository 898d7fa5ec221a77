"""Checks against independently coded closed forms.

The oracle for the outcome table is p = (1 - la*lb a.b)/4, written out here
by hand rather than imported, so the projector algebra in the package is
tested against a second route.
"""

import math

import numpy as np
import pytest

from ghostfield.geometry import Direction3, random_direction
from ghostfield.quantum import (
    IDENTITY_2,
    OUTCOME_VALUES,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    OutcomeTable,
    SpinObservable,
    TwoSpinState,
    joint_expectation,
    joint_outcome_table,
    make_singlet,
    malus_spin_projection,
    pauli_projection,
    product_state,
    single_expectation,
)

TOL = 1e-12
INV_SQRT2 = 1.0 / math.sqrt(2.0)


def oracle_table(a, b):
    e = a.dot(b)
    return np.array(
        [[(1.0 + la * lb * -e) / 4.0 for lb in OUTCOME_VALUES] for la in OUTCOME_VALUES]
    )


def spinor(theta, phi):
    return np.array(
        [math.cos(theta / 2.0), np.exp(1j * phi) * math.sin(theta / 2.0)], dtype=complex
    )


def test_singlet_amplitudes_frozen():
    psi = make_singlet()
    assert psi.amplitudes[0] == 0.0
    assert psi.amplitudes[1] == INV_SQRT2
    assert psi.amplitudes[2] == -INV_SQRT2
    assert psi.amplitudes[3] == 0.0
    assert abs(psi.norm() - 1.0) < TOL


def test_state_validation():
    with pytest.raises(ValueError):
        TwoSpinState(np.array([1.0, 1.0, 0.0, 0.0]))
    with pytest.raises(ValueError):
        TwoSpinState(np.zeros(3))
    psi = make_singlet()
    with pytest.raises(ValueError):
        psi.amplitudes[0] = 1.0


def test_pauli_matrices_multiply_correctly():
    assert np.allclose(SIGMA_X @ SIGMA_Y, 1j * SIGMA_Z, atol=TOL)
    assert np.allclose(SIGMA_Y @ SIGMA_Z, 1j * SIGMA_X, atol=TOL)
    assert np.allclose(SIGMA_Z @ SIGMA_X, 1j * SIGMA_Y, atol=TOL)


def test_pauli_projection_properties(rng):
    for _ in range(50):
        m = pauli_projection(random_direction(rng)).m
        assert np.allclose(m, m.conj().T, atol=TOL)
        assert abs(m[0, 0] + m[1, 1]) < TOL
        assert np.allclose(m @ m, IDENTITY_2, atol=TOL)
    assert np.array_equal(pauli_projection(Direction3(0.0, 0.0, 1.0)).m, SIGMA_Z)


def test_observable_validation():
    with pytest.raises(ValueError):
        SpinObservable(np.array([[0.0, 1.0], [0.0, 0.0]]))  # not Hermitian
    with pytest.raises(ValueError):
        SpinObservable(np.eye(2))  # not traceless
    with pytest.raises(ValueError):
        SpinObservable(0.5 * SIGMA_Z)  # not involutory


def test_singlet_anticorrelation_along_common_axis(rng):
    psi = make_singlet()
    for _ in range(50):
        a = random_direction(rng)
        assert abs(joint_expectation(psi, a, a) + 1.0) < TOL
        assert abs(joint_expectation(psi, a, -a) - 1.0) < TOL


def test_singlet_correlation_equals_minus_dot(rng):
    psi = make_singlet()
    for _ in range(1000):
        a = random_direction(rng)
        b = random_direction(rng)
        assert abs(joint_expectation(psi, a, b) + a.dot(b)) < TOL


def test_correlation_at_named_angles():
    psi = make_singlet()
    a = Direction3.from_polar_angle(0.0)
    for deg, expected in ((0.0, -1.0), (60.0, -0.5), (90.0, 0.0), (120.0, 0.5), (180.0, 1.0)):
        b = Direction3.from_polar_angle(math.radians(deg))
        assert abs(joint_expectation(psi, a, b) - expected) < TOL


def test_singlet_is_rotation_invariant(rng):
    from test_geometry import rotation_matrix

    psi = make_singlet()
    for _ in range(100):
        axis = rng.normal(size=3)
        axis /= np.linalg.norm(axis)
        r = rotation_matrix(axis, rng.uniform(0.0, 2.0 * math.pi))
        a = random_direction(rng)
        b = random_direction(rng)
        assert abs(
            joint_expectation(psi, a.rotated(r), b.rotated(r)) - joint_expectation(psi, a, b)
        ) < TOL


def test_outcome_table_matches_hand_oracle(rng):
    psi = make_singlet()
    for _ in range(200):
        a = random_direction(rng)
        b = random_direction(rng)
        table = joint_outcome_table(psi, a, b)
        assert np.max(np.abs(table.p - oracle_table(a, b))) < TOL


def test_outcome_table_at_120_degrees_frozen():
    psi = make_singlet()
    a = Direction3.from_polar_angle(0.0)
    b = Direction3.from_polar_angle(math.radians(120.0))
    table = joint_outcome_table(psi, a, b)
    assert np.allclose(table.p, [[0.375, 0.125], [0.125, 0.375]], atol=TOL)


def test_table_expectation_and_marginals(rng):
    psi = make_singlet()
    for _ in range(100):
        a = random_direction(rng)
        b = random_direction(rng)
        table = joint_outcome_table(psi, a, b)
        assert abs(table.expectation() - joint_expectation(psi, a, b)) < TOL
        assert np.allclose(table.marginal_a(), [0.5, 0.5], atol=TOL)
        assert np.allclose(table.marginal_b(), [0.5, 0.5], atol=TOL)


def test_outcome_table_validation():
    with pytest.raises(ValueError):
        OutcomeTable(np.array([[0.5, 0.5], [0.5, 0.5]]))  # sums to 2
    with pytest.raises(ValueError):
        OutcomeTable(np.array([[-0.5, 0.5], [0.5, 0.5]]))
    with pytest.raises(ValueError):
        OutcomeTable(np.ones((2, 3)) / 6.0)


def test_single_expectation_vanishes_for_singlet(rng):
    psi = make_singlet()
    for _ in range(50):
        a = random_direction(rng)
        assert abs(single_expectation(psi, a, "a")) < TOL
        assert abs(single_expectation(psi, a, "b")) < TOL


def test_single_expectation_particle_selector():
    z = Direction3(0.0, 0.0, 1.0)
    psi = product_state(1, -1)
    assert abs(single_expectation(psi, z, "a") - 1.0) < TOL
    assert abs(single_expectation(psi, z, "b") + 1.0) < TOL
    with pytest.raises(ValueError):
        single_expectation(psi, z, "c")


@pytest.mark.parametrize("sa", [1, -1])
@pytest.mark.parametrize("sb", [1, -1])
def test_product_state_correlation(sa, sb):
    z = Direction3(0.0, 0.0, 1.0)
    psi = product_state(sa, sb)
    assert abs(joint_expectation(psi, z, z) - sa * sb) < TOL


def test_malus_projection_against_spinor_oracle(rng):
    # ⟨n|(1 + a.sigma)|n⟩/2 with |n⟩ built explicitly from polar angles
    for _ in range(200):
        theta_n = math.acos(rng.uniform(-1.0, 1.0))
        phi_n = rng.uniform(0.0, 2.0 * math.pi)
        n = Direction3.normalized(
            math.sin(theta_n) * math.cos(phi_n),
            math.sin(theta_n) * math.sin(phi_n),
            math.cos(theta_n),
        )
        a = random_direction(rng)
        chi = spinor(theta_n, phi_n)
        op = 0.5 * (IDENTITY_2 + pauli_projection(a).m)
        expected = float(np.real(np.vdot(chi, op @ chi)))
        assert abs(malus_spin_projection(n, a) - expected) < TOL


def test_malus_projection_named_values():
    z = Direction3(0.0, 0.0, 1.0)
    x = Direction3(1.0, 0.0, 0.0)
    assert malus_spin_projection(z, z) == 1.0
    assert malus_spin_projection(-z, z) == 0.0
    assert malus_spin_projection(x, z) == 0.5
    # half-angle law at 120 degrees: cos^2(60 deg) = 1/4
    b = Direction3.from_polar_angle(math.radians(120.0))
    assert abs(malus_spin_projection(b, z) - 0.25) < TOL
