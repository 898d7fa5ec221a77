"""The nonlocal field picture: positive, analyzer-dependent conditionals.

Joint outcome statistics are factored as P(lambda_a, lambda_b) =
P(lambda_a | lambda_b) P(lambda_b). The marginal P(lambda_b) = 1/2 is
analyzer independent, but the 2x2 conditional matrix depends on the full
angle alpha between the two analyzers. Every entry is positive, and the
analyzer dependence is where the nonlocality lives.

Outcomes are plain integers +1 ("parallel") and -1 ("antiparallel"); matrix
rows index lambda_a and columns lambda_b, each mapped 0 -> +1, 1 -> -1.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from ._rng import chunk_generators, chunk_sizes
from .geometry import Direction3
from .local_field import MCEstimate, estimate_from_values
from .quantum import ALGEBRA_TOL, OUTCOME_VALUES, TwoSpinState, joint_outcome_table

# An outcome is the integer +1 or -1.
Outcome = int

SEQUENCE_CSV_COLUMNS = ("trial_index", "lambda_b", "lambda_a")


@dataclass(frozen=True)
class ConditionalMatrix:
    """Column-stochastic 2x2 matrix q[i][j] = P(lambda_a = i | lambda_b = j)."""

    q: np.ndarray

    def __post_init__(self) -> None:
        q = np.asarray(self.q, dtype=float)
        if q.shape != (2, 2):
            raise ValueError(f"expected a 2x2 matrix, got {q.shape}")
        if np.any(q < -ALGEBRA_TOL) or np.any(q > 1.0 + ALGEBRA_TOL):
            raise ValueError("conditional probabilities must lie in [0, 1]")
        col_sums = q.sum(axis=0)
        if np.max(np.abs(col_sums - 1.0)) > ALGEBRA_TOL:
            raise ValueError(f"columns must each sum to 1, got {col_sums}")
        q.setflags(write=False)
        object.__setattr__(self, "q", q)


@dataclass(frozen=True)
class OutcomeSequencePair:
    """Two equal-length sequences of +-1 outcomes and the seed that made them."""

    lambda_b: np.ndarray
    lambda_a: np.ndarray
    seed: int

    def __post_init__(self) -> None:
        lam_b = np.asarray(self.lambda_b, dtype=np.int8)
        lam_a = np.asarray(self.lambda_a, dtype=np.int8)
        if lam_b.ndim != 1 or lam_b.shape != lam_a.shape or lam_b.size < 1:
            raise ValueError("sequences must be equal-length 1-d arrays of length >= 1")
        for lam in (lam_b, lam_a):
            if not np.all(np.abs(lam) == 1):
                raise ValueError("outcomes must be +1 or -1")
            lam.setflags(write=False)
        object.__setattr__(self, "lambda_b", lam_b)
        object.__setattr__(self, "lambda_a", lam_a)

    def __len__(self) -> int:
        return int(self.lambda_b.size)

    def same_outcome_frequency(self) -> float:
        return float(np.mean(self.lambda_a == self.lambda_b))


def singlet_conditional(alpha: float) -> ConditionalMatrix:
    """Conditional matrix for analyzers at full angle alpha (radians).

    Same outcome with probability sin²(α/2), opposite with cos²(α/2):
    parallel analyzers (alpha = 0) give perfect anticorrelation.
    """
    if not math.isfinite(alpha):
        raise ValueError(f"alpha must be finite, got {alpha!r}")
    same = math.sin(alpha / 2.0) ** 2
    diff = math.cos(alpha / 2.0) ** 2
    return ConditionalMatrix(np.array([[same, diff], [diff, same]]))


def conditional_from_state(
    psi: TwoSpinState, a: Direction3, b: Direction3
) -> ConditionalMatrix:
    """Conditional matrix from the joint outcome table of an arbitrary state.

    Columns are the joint probabilities divided by the lambda_b marginal.
    Raises ValueError when a marginal vanishes and conditioning is undefined.
    """
    table = joint_outcome_table(psi, a, b)
    marginal_b = table.marginal_b()
    if np.any(marginal_b <= ALGEBRA_TOL):
        raise ValueError(
            f"conditioning undefined: lambda_b marginal {marginal_b} has a zero entry"
        )
    return ConditionalMatrix(table.p / marginal_b[np.newaxis, :])


def marginal_outcome() -> float:
    """P(lambda_b = +1) = P(lambda_b = -1) = 1/2, independent of analyzers."""
    return 0.5


def correlation_from_matrix(q: ConditionalMatrix) -> float:
    """E = sum of lambda_a * lambda_b * q[lambda_a|lambda_b] * 1/2."""
    total = 0.0
    for i, la in enumerate(OUTCOME_VALUES):
        for j, lb in enumerate(OUTCOME_VALUES):
            total += la * lb * q.q[i, j] * marginal_outcome()
    return float(total)


#: Hand-picked positive conditional matrix that respects the 1/2 marginals but
#: produces only E = -1/6 at the trine angles, so its three-correlation Bell
#: sum is -1/2, comfortably inside the local bound. Note: the source text
#: displaying this matrix also quotes its correlation as -(1/3)cos(120°) =
#: +1/6 and a 5/12 same-outcome confidence; matrix and narrative are
#: transposed relative to each other. The matrix is shipped verbatim and its
#: correlation computed by `correlation_from_matrix`, which gives -1/6
#: (same-outcome probability 5/12 sits on the diagonal).
COUNTEREXAMPLE_5_12 = ConditionalMatrix(
    np.array([[5.0 / 12.0, 7.0 / 12.0], [7.0 / 12.0, 5.0 / 12.0]])
)


def generate_sequences(
    q: ConditionalMatrix, n: int, seed: int, workers: int = 1
) -> OutcomeSequencePair:
    """Draw n correlated outcome pairs: lambda_b fair, lambda_a from its column.

    Deterministic for fixed (seed, workers); sub-streams are spawned per
    worker chunk.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    p_plus_given_plus = float(q.q[0, 0])
    p_plus_given_minus = float(q.q[0, 1])

    parts_b = []
    parts_a = []
    for size, rng in zip(chunk_sizes(n, workers), chunk_generators(seed, workers)):
        lam_b, lam_a = kernels.conditional_pair_outcomes(
            rng.random((2, size)), p_plus_given_plus, p_plus_given_minus
        )
        parts_b.append(lam_b)
        parts_a.append(lam_a)
    return OutcomeSequencePair(
        lambda_b=np.concatenate(parts_b), lambda_a=np.concatenate(parts_a), seed=seed
    )


def empirical_correlation(seqs: OutcomeSequencePair) -> MCEstimate:
    """Ensemble average of the per-trial products lambda_a * lambda_b."""
    products = (seqs.lambda_a.astype(np.float64)) * seqs.lambda_b
    return estimate_from_values(products, seqs.seed)


def sequences_to_csv(
    seqs: OutcomeSequencePair,
    stream: io.TextIOBase,
    columns: tuple[str, str, str] = SEQUENCE_CSV_COLUMNS,
) -> None:
    """Write the pair as CSV rows (index, lambda_b, lambda_a)."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(columns)
    for i in range(len(seqs)):
        writer.writerow([i, int(seqs.lambda_b[i]), int(seqs.lambda_a[i])])
