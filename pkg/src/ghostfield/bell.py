"""Three-correlation Bell harness.

Evaluates S = E(a,b) + E(a,c) + E(b,c) for any correlation model on a
three-analyzer configuration and compares it against the local-realism bound
S <= 1, which holds for every theory of predetermined +-1 outcomes with
perfect anticorrelation. The bound extends to continuous bounded realities
|sigma| <= 1 by convexity: every such model is a mixture of the eight +-1
extreme strategies enumerated here, so the +-1 maximum bounds them all.

The quantum value on the trine configuration (three coplanar analyzers at
mutual 120 degrees) is 3/2, violating the bound by 1/2.
"""

from __future__ import annotations

import hashlib
import json
import math
import struct
from dataclasses import dataclass
from itertools import product as iter_product

from .geometry import Direction3
from .local_field import (
    MCEstimate,
    SignedSphereDistribution,
    malus_correlation_closed,
    naive_field,
    quasi_field,
    signed_mc_correlation,
)
from .nonlocal_field import (
    COUNTEREXAMPLE_5_12,
    ConditionalMatrix,
    correlation_from_matrix,
    empirical_correlation,
    generate_sequences,
    singlet_conditional,
)
from .quantum import TwoSpinState, joint_expectation, make_singlet

LHV_BOUND = 1.0
SUM_TOL = 1e-12
DISTINCT_TOL = 1e-9


class CorrelationModel:
    """Maps an analyzer pair (a, b) to a correlation E(a, b) in [-1, 1]."""

    name: str = "abstract"

    def correlation(self, a: Direction3, b: Direction3) -> float:
        raise NotImplementedError


def _canonical_pair(a: Direction3, b: Direction3) -> tuple[Direction3, Direction3]:
    """Order a pair lexicographically so swapped arguments sample identically."""
    if (a.x, a.y, a.z) <= (b.x, b.y, b.z):
        return a, b
    return b, a


def derive_pair_seed(base_seed: int, a: Direction3, b: Direction3) -> int:
    """Stable 64-bit sub-seed for one analyzer pair.

    Hashing the canonicalized pair with the base seed makes MC evaluations
    independent of call order and exactly symmetric under swapping a and b.
    """
    lo, hi = _canonical_pair(a, b)
    payload = struct.pack("<q6d", base_seed, lo.x, lo.y, lo.z, hi.x, hi.y, hi.z)
    return int.from_bytes(hashlib.sha256(payload).digest()[:8], "little")


class QuantumModel(CorrelationModel):
    """Exact quantum expectation values for a fixed two-spin state."""

    def __init__(self, psi: TwoSpinState | None = None, name: str = "quantum"):
        self.psi = make_singlet() if psi is None else psi
        self.name = name

    def correlation(self, a: Direction3, b: Direction3) -> float:
        return joint_expectation(self.psi, a, b)


class LocalClosedFormModel(CorrelationModel):
    """Closed-form correlation of a signed two-component sphere distribution."""

    def __init__(self, dist: SignedSphereDistribution, name: str):
        self.dist = dist
        self.name = name

    def correlation(self, a: Direction3, b: Direction3) -> float:
        return malus_correlation_closed(self.dist, a, b)


class LocalMonteCarloModel(CorrelationModel):
    """Signed-weight MC estimate of a local field correlation.

    Each pair gets its own derived sub-seed; `last_estimates` keeps the full
    MCEstimate per evaluated pair for error propagation.
    """

    def __init__(
        self, dist: SignedSphereDistribution, n_samples: int, seed: int, name: str
    ):
        self.dist = dist
        self.n_samples = n_samples
        self.seed = seed
        self.name = name
        self.last_estimates: list[MCEstimate] = []

    def correlation(self, a: Direction3, b: Direction3) -> float:
        lo, hi = _canonical_pair(a, b)
        estimate = signed_mc_correlation(
            self.dist, lo, hi, self.n_samples, derive_pair_seed(self.seed, a, b)
        )
        self.last_estimates.append(estimate)
        return estimate.mean


class NonlocalMatrixModel(CorrelationModel):
    """Correlation from the analyzer-angle conditional matrix."""

    name = "nonlocal-matrix"

    def correlation(self, a: Direction3, b: Direction3) -> float:
        return correlation_from_matrix(singlet_conditional(a.angle_to(b)))


class NonlocalSequenceModel(CorrelationModel):
    """Empirical correlation of generated +-1 outcome sequences."""

    def __init__(self, n_samples: int, seed: int, name: str = "nonlocal-mc"):
        self.n_samples = n_samples
        self.seed = seed
        self.name = name
        self.last_estimates: list[MCEstimate] = []

    def correlation(self, a: Direction3, b: Direction3) -> float:
        matrix = singlet_conditional(a.angle_to(b))
        seqs = generate_sequences(
            matrix, self.n_samples, derive_pair_seed(self.seed, a, b)
        )
        estimate = empirical_correlation(seqs)
        self.last_estimates.append(estimate)
        return estimate.mean


class FixedMatrixModel(CorrelationModel):
    """Applies one fixed conditional matrix to every analyzer pair."""

    def __init__(self, matrix: ConditionalMatrix, name: str):
        self.matrix = matrix
        self.name = name

    def correlation(self, a: Direction3, b: Direction3) -> float:
        return correlation_from_matrix(self.matrix)


@dataclass(frozen=True)
class BellConfig:
    """Three pairwise-distinct analyzer directions."""

    a: Direction3
    b: Direction3
    c: Direction3

    def __post_init__(self) -> None:
        for first, second in ((self.a, self.b), (self.a, self.c), (self.b, self.c)):
            gap = max(
                abs(first.x - second.x),
                abs(first.y - second.y),
                abs(first.z - second.z),
            )
            if gap <= DISTINCT_TOL:
                raise ValueError("analyzer directions must be pairwise distinct")


@dataclass(frozen=True)
class BellReport:
    """Three pairwise correlations, their sum, and the verdict against S <= 1."""

    e_ab: float
    e_ac: float
    e_bc: float
    s: float
    bound: float
    violated: bool
    model_name: str
    config: BellConfig

    def __post_init__(self) -> None:
        if abs(self.s - (self.e_ab + self.e_ac + self.e_bc)) > SUM_TOL:
            raise ValueError("s must equal the sum of the three correlations")

    def to_json_dict(self) -> dict:
        return {
            "e_ab": self.e_ab,
            "e_ac": self.e_ac,
            "e_bc": self.e_bc,
            "s": self.s,
            "bound": self.bound,
            "violated": self.violated,
            "model_name": self.model_name,
            "config": {
                "a": [self.config.a.x, self.config.a.y, self.config.a.z],
                "b": [self.config.b.x, self.config.b.y, self.config.b.z],
                "c": [self.config.c.x, self.config.c.y, self.config.c.z],
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def trine_config() -> BellConfig:
    """Three coplanar analyzers at mutual 120 degrees, in the x-z plane."""
    third = 2.0 * math.pi / 3.0
    return BellConfig(
        a=Direction3.from_polar_angle(0.0),
        b=Direction3.from_polar_angle(third),
        c=Direction3.from_polar_angle(2.0 * third),
    )


def bell_sum(model: CorrelationModel, config: BellConfig) -> BellReport:
    """Evaluate the three correlations and test their sum against the bound."""
    e_ab = model.correlation(config.a, config.b)
    e_ac = model.correlation(config.a, config.c)
    e_bc = model.correlation(config.b, config.c)
    s = e_ab + e_ac + e_bc
    return BellReport(
        e_ab=e_ab,
        e_ac=e_ac,
        e_bc=e_bc,
        s=s,
        bound=LHV_BOUND,
        violated=s > LHV_BOUND,
        model_name=model.name,
        config=config,
    )


def reduced_trine_expression(model: CorrelationModel) -> float:
    """2 E(120°) + E(240°) for a model depending only on the analyzer angle.

    Equals the trine Bell sum for such models.
    """
    reference = Direction3.from_polar_angle(0.0)
    e_120 = model.correlation(reference, Direction3.from_polar_angle(2.0 * math.pi / 3.0))
    e_240 = model.correlation(reference, Direction3.from_polar_angle(4.0 * math.pi / 3.0))
    return 2.0 * e_120 + e_240


@dataclass(frozen=True)
class DeterministicStrategy:
    """Predetermined +-1 outcomes of particle a for the three analyzers.

    Particle b's outcomes are the componentwise negation (perfect
    anticorrelation is built in, not sampled).
    """

    s_a: tuple[int, int, int]

    def __post_init__(self) -> None:
        if any(v not in (-1, 1) for v in self.s_a):
            raise ValueError(f"strategy values must be +-1, got {self.s_a}")

    @property
    def s_b(self) -> tuple[int, int, int]:
        return (-self.s_a[0], -self.s_a[1], -self.s_a[2])

    def bell_sum(self) -> float:
        """S for this strategy: -(s_a(a)s_a(b) + s_a(a)s_a(c) + s_a(b)s_a(c))."""
        u, v, w = self.s_a
        return float(-(u * v + u * w + v * w))

    def sigma(self) -> float:
        """The product quantity -(sum over a-side)(sum over b-side) = (sum)²."""
        return float(sum(self.s_a)) ** 2


def enumerate_strategies() -> list[DeterministicStrategy]:
    """All 8 deterministic anticorrelated strategies."""
    return [DeterministicStrategy(s) for s in iter_product((1, -1), repeat=3)]


def lhv_bruteforce_max() -> float:
    """Exhaustive maximum of S over deterministic strategies (the LHV supremum).

    Mixtures of strategies are convex combinations, so the extreme-point
    maximum bounds every local-realistic model. Equals 1.
    """
    return max(strategy.bell_sum() for strategy in enumerate_strategies())


def lhv_sigma_min() -> float:
    """Exhaustive minimum of the product quantity over strategies. Equals 1."""
    return min(strategy.sigma() for strategy in enumerate_strategies())


def make_model(name: str, n_samples: int = 10**6, seed: int = 0) -> CorrelationModel:
    """Instantiate a correlation model by registry name."""
    if name == "quantum":
        return QuantumModel()
    if name == "naive-local":
        return LocalClosedFormModel(naive_field(), name)
    if name == "quasi-local":
        return LocalClosedFormModel(quasi_field(), name)
    if name == "naive-local-mc":
        return LocalMonteCarloModel(naive_field(), n_samples, seed, name)
    if name == "quasi-local-mc":
        return LocalMonteCarloModel(quasi_field(), n_samples, seed, name)
    if name == "nonlocal-matrix":
        return NonlocalMatrixModel()
    if name == "nonlocal-mc":
        return NonlocalSequenceModel(n_samples, seed)
    if name == "counterexample-5-12":
        return FixedMatrixModel(COUNTEREXAMPLE_5_12, name)
    raise ValueError(f"unknown model {name!r}; choose from {MODEL_NAMES}")


MODEL_NAMES = (
    "quantum",
    "naive-local",
    "quasi-local",
    "naive-local-mc",
    "quasi-local-mc",
    "nonlocal-matrix",
    "nonlocal-mc",
    "counterexample-5-12",
)
