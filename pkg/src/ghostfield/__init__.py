"""EPR spin correlations three equivalent ways, tested against the Bell bound.

Exact quantum mechanics of the two-spin singlet, a signed local distribution
over hidden spin directions, and a positive nonlocal conditional distribution
all produce the same correlation E(a, b) = -a.b; the harness shows which
assumptions each picture gives up to beat the local-realism bound S <= 1.
"""

from .bell import (
    BellConfig,
    BellReport,
    CorrelationModel,
    DeterministicStrategy,
    MODEL_NAMES,
    bell_sum,
    enumerate_strategies,
    lhv_bruteforce_max,
    lhv_sigma_min,
    make_model,
    reduced_trine_expression,
    trine_config,
)
from .geometry import Direction3, random_direction
from .kernels import backend_name
from .local_field import (
    MCEstimate,
    SignedSphereDistribution,
    SphereQuadrature,
    build_quadrature,
    malus_correlation_closed,
    malus_correlation_quadrature,
    marginal_density,
    naive_field,
    quasi_field,
    signed_mc_correlation,
    single_malus_expectation,
)
from .nonlocal_field import (
    COUNTEREXAMPLE_5_12,
    ConditionalMatrix,
    OutcomeSequencePair,
    conditional_from_state,
    correlation_from_matrix,
    empirical_correlation,
    generate_sequences,
    marginal_outcome,
    sequences_to_csv,
    singlet_conditional,
)
from .quantum import (
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

__version__ = "0.1.0"

__all__ = [
    "BellConfig",
    "BellReport",
    "COUNTEREXAMPLE_5_12",
    "ConditionalMatrix",
    "CorrelationModel",
    "DeterministicStrategy",
    "Direction3",
    "MCEstimate",
    "MODEL_NAMES",
    "OutcomeSequencePair",
    "OutcomeTable",
    "SignedSphereDistribution",
    "SphereQuadrature",
    "SpinObservable",
    "TwoSpinState",
    "backend_name",
    "bell_sum",
    "build_quadrature",
    "conditional_from_state",
    "correlation_from_matrix",
    "empirical_correlation",
    "enumerate_strategies",
    "generate_sequences",
    "joint_expectation",
    "joint_outcome_table",
    "lhv_bruteforce_max",
    "lhv_sigma_min",
    "make_model",
    "make_singlet",
    "malus_correlation_closed",
    "malus_correlation_quadrature",
    "malus_spin_projection",
    "marginal_density",
    "marginal_outcome",
    "naive_field",
    "pauli_projection",
    "product_state",
    "quasi_field",
    "random_direction",
    "reduced_trine_expression",
    "sequences_to_csv",
    "signed_mc_correlation",
    "single_expectation",
    "single_malus_expectation",
    "singlet_conditional",
    "trine_config",
]
