"""Exact quantum mechanics of two spin-1/2 particles.

States, Pauli projections, single and joint expectation values, and joint
outcome probabilities. Serves as the ground-truth oracle the two field
pictures are checked against.

Basis ordering is the tensor product |++>, |+->, |-+>, |-->, where |+> and
|-> are the sigma_z eigenstates and the first factor is particle a. Outcome
indices map 0 -> +1 and 1 -> -1 everywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import Direction3

ALGEBRA_TOL = 1e-12

# Outcome index convention: position 0 holds +1, position 1 holds -1.
OUTCOME_VALUES = (1, -1)

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
IDENTITY_2 = np.eye(2, dtype=complex)


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class TwoSpinState:
    """Normalized 4-component amplitude vector for the particle pair."""

    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amps.shape != (4,):
            raise ValueError(f"expected 4 amplitudes, got {amps.shape}")
        norm_sq = float(np.sum(np.abs(amps) ** 2))
        if abs(norm_sq - 1.0) > ALGEBRA_TOL:
            raise ValueError(f"state must be normalized, got |psi|^2 = {norm_sq!r}")
        object.__setattr__(self, "amplitudes", _readonly(amps))

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


@dataclass(frozen=True)
class SpinObservable:
    """2x2 Hermitian, traceless, involutory matrix: a spin projection a.sigma."""

    m: np.ndarray

    def __post_init__(self) -> None:
        m = np.asarray(self.m, dtype=complex)
        if m.shape != (2, 2):
            raise ValueError(f"expected a 2x2 matrix, got {m.shape}")
        if np.max(np.abs(m - m.conj().T)) > ALGEBRA_TOL:
            raise ValueError("observable must be Hermitian")
        if abs(m[0, 0] + m[1, 1]) > ALGEBRA_TOL:
            raise ValueError("observable must be traceless")
        if np.max(np.abs(m @ m - IDENTITY_2)) > ALGEBRA_TOL:
            raise ValueError("observable must square to the identity")
        object.__setattr__(self, "m", _readonly(m))


@dataclass(frozen=True)
class OutcomeTable:
    """Joint outcome probabilities p[i][j] for outcomes (lambda_a, lambda_b).

    Row index i is the outcome of particle a, column index j the outcome of
    particle b, with 0 -> +1 and 1 -> -1.
    """

    p: np.ndarray

    def __post_init__(self) -> None:
        p = np.asarray(self.p, dtype=float)
        if p.shape != (2, 2):
            raise ValueError(f"expected a 2x2 table, got {p.shape}")
        if np.any(p < -ALGEBRA_TOL) or np.any(p > 1.0 + ALGEBRA_TOL):
            raise ValueError("probabilities must lie in [0, 1]")
        if abs(float(p.sum()) - 1.0) > ALGEBRA_TOL:
            raise ValueError(f"probabilities must sum to 1, got {float(p.sum())!r}")
        object.__setattr__(self, "p", _readonly(p))

    def expectation(self) -> float:
        """E = sum over outcomes of lambda_a * lambda_b * p."""
        total = 0.0
        for i, la in enumerate(OUTCOME_VALUES):
            for j, lb in enumerate(OUTCOME_VALUES):
                total += la * lb * self.p[i, j]
        return total

    def marginal_a(self) -> np.ndarray:
        return np.asarray(self.p.sum(axis=1))

    def marginal_b(self) -> np.ndarray:
        return np.asarray(self.p.sum(axis=0))


def make_singlet() -> TwoSpinState:
    """The total-spin-zero state (|+-> - |-+>)/sqrt(2)."""
    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    return TwoSpinState(np.array([0.0, inv_sqrt2, -inv_sqrt2, 0.0], dtype=complex))


def product_state(outcome_a: int, outcome_b: int) -> TwoSpinState:
    """Product basis state |s_a s_b> with s in {+1, -1}; handy test fixture."""
    amps = np.zeros(4, dtype=complex)
    amps[2 * OUTCOME_VALUES.index(outcome_a) + OUTCOME_VALUES.index(outcome_b)] = 1.0
    return TwoSpinState(amps)


def pauli_projection(a: Direction3) -> SpinObservable:
    """Spin projection along a: a_x sigma_x + a_y sigma_y + a_z sigma_z."""
    return SpinObservable(a.x * SIGMA_X + a.y * SIGMA_Y + a.z * SIGMA_Z)


def _spin_projector(a: Direction3, outcome: int) -> np.ndarray:
    """Projector (1 + outcome * a.sigma)/2 onto the outcome eigenspace."""
    return 0.5 * (IDENTITY_2 + outcome * pauli_projection(a).m)


def single_expectation(psi: TwoSpinState, a: Direction3, particle: str) -> float:
    """Expectation of the spin of one particle along a.

    `particle` selects the tensor factor: "a" measures the first particle,
    "b" the second. For the singlet both vanish for every direction.
    """
    sigma = pauli_projection(a).m
    if particle == "a":
        op = np.kron(sigma, IDENTITY_2)
    elif particle == "b":
        op = np.kron(IDENTITY_2, sigma)
    else:
        raise ValueError(f"particle must be 'a' or 'b', got {particle!r}")
    return float(np.real(np.vdot(psi.amplitudes, op @ psi.amplitudes)))


def joint_expectation(psi: TwoSpinState, a: Direction3, b: Direction3) -> float:
    """Joint spin correlation <psi| a.sigma (x) b.sigma |psi>.

    For the singlet this equals -a.b: perfect anticorrelation for parallel
    analyzers, +1/2 at 120 degrees.
    """
    op = np.kron(pauli_projection(a).m, pauli_projection(b).m)
    return float(np.real(np.vdot(psi.amplitudes, op @ psi.amplitudes)))


def joint_outcome_table(psi: TwoSpinState, a: Direction3, b: Direction3) -> OutcomeTable:
    """Probabilities of the four joint outcomes under analyzers a and b."""
    p = np.empty((2, 2))
    for i, la in enumerate(OUTCOME_VALUES):
        proj_a = _spin_projector(a, la)
        for j, lb in enumerate(OUTCOME_VALUES):
            op = np.kron(proj_a, _spin_projector(b, lb))
            p[i, j] = float(np.real(np.vdot(psi.amplitudes, op @ psi.amplitudes)))
    return OutcomeTable(p)


def malus_spin_projection(n: Direction3, a: Direction3) -> float:
    """Detection probability (1 + n.a)/2 = cos²(α/2) for a spin along n
    measured by an analyzer along a, the spin half-angle attenuation law."""
    return 0.5 * (1.0 + n.dot(a))
