"""The local field picture: signed distributions over hidden spin directions.

A two-spin correlation is written as an average of the product of directional
cosines (a.n_a)(b.n_b) over a distribution P(n_a, n_b) on the product of two
spheres. This module houses the two members of that family actually used:

* the naive field: a uniformly distributed n_a rigidly paired with the
  antiparallel n_b = -n_a, which underestimates the quantum correlation by a
  factor of 3;
* the quasi field: atom weight 3 and uniform weight -2, which reproduces the
  quantum correlation and the isotropic marginals exactly but is negative on
  every non-antiparallel pair.

Correlations are evaluated three independent ways: closed form, spherical
product quadrature, and a signed-weight Monte Carlo estimator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from ._rng import chunk_generators, chunk_sizes
from .geometry import Direction3

MASS_TOL = 1e-12
QUAD_TOL = 1e-10
SPHERE_AREA = 4.0 * math.pi

MIN_MC_SAMPLES = 1000

# Distance from the antiparallel manifold below which the atom component is
# singular and a pointwise density is undefined.
ATOM_SINGULARITY_TOL = 1e-9


@dataclass(frozen=True)
class SignedSphereDistribution:
    """Signed measure on S² x S²: antiparallel atom plus independent uniform.

    `atom_weight` scales the component pairing a uniform n_a with n_b = -n_a;
    `uniform_weight` scales the independent-uniform component of density
    1/(4pi)². Total signed mass must be 1.
    """

    atom_weight: float
    uniform_weight: float

    def __post_init__(self) -> None:
        mass = self.atom_weight + self.uniform_weight
        if not math.isfinite(mass) or abs(mass - 1.0) > MASS_TOL:
            raise ValueError(f"total signed mass must be 1, got {mass!r}")

    @property
    def total_signed_mass(self) -> float:
        return self.atom_weight + self.uniform_weight

    @property
    def is_nonnegative(self) -> bool:
        return self.atom_weight >= 0.0 and self.uniform_weight >= 0.0

    def density(self, n_a: Direction3, n_b: Direction3) -> float:
        """Pointwise density away from the antiparallel manifold.

        There the atom component vanishes, leaving uniform_weight/(4pi)².
        Raises ValueError on (near-)antiparallel pairs, where the atom is a
        delta and no finite pointwise value exists.
        """
        gap = math.sqrt(
            (n_a.x + n_b.x) ** 2 + (n_a.y + n_b.y) ** 2 + (n_a.z + n_b.z) ** 2
        )
        if gap <= ATOM_SINGULARITY_TOL:
            raise ValueError("density is singular on the antiparallel manifold")
        return self.uniform_weight / SPHERE_AREA**2


def naive_field() -> SignedSphereDistribution:
    """Rigid antiparallel pairing of uniform spin directions."""
    return SignedSphereDistribution(atom_weight=1.0, uniform_weight=0.0)


def quasi_field() -> SignedSphereDistribution:
    """The signed distribution reproducing the quantum correlation.

    Tripling the atom weight fixes the factor-of-3 shortfall of the naive
    field; the uniform weight -2 restores total mass 1 and the isotropic
    marginals, at the price of a strictly negative density on every
    non-antiparallel pair.
    """
    return SignedSphereDistribution(atom_weight=3.0, uniform_weight=-2.0)


def marginal_density(dist: SignedSphereDistribution) -> float:
    """One-fold marginal density over either argument: constant 1/(4pi)."""
    return dist.total_signed_mass / SPHERE_AREA


def malus_correlation_closed(
    dist: SignedSphereDistribution, a: Direction3, b: Direction3
) -> float:
    """Exact correlation for this family: atom_weight * (-(a.b)/3).

    The atom component integrates (a.n)(b.-n) over uniform n to -(a.b)/3; the
    uniform component factorizes into two single-sphere cosine averages, each
    zero.
    """
    return dist.atom_weight * (-a.dot(b) / 3.0)


def single_malus_expectation(dist: SignedSphereDistribution, a: Direction3) -> float:
    """Single-analyzer average of the directional cosine: identically zero.

    Both marginals of any mass-1 member of this family are isotropic, so the
    average of a.n over the sphere vanishes.
    """
    del dist, a
    return 0.0


@dataclass(frozen=True)
class SphereQuadrature:
    """Product quadrature on S²: Gauss-Legendre in cos(theta) x uniform in phi.

    `nodes` is an (N, 3) array of unit vectors, `weights` an (N,) array of
    positive weights summing to the sphere area 4pi.
    """

    nodes: np.ndarray
    weights: np.ndarray

    def __post_init__(self) -> None:
        nodes = np.asarray(self.nodes, dtype=float)
        weights = np.asarray(self.weights, dtype=float)
        if nodes.ndim != 2 or nodes.shape[1] != 3 or weights.shape != (nodes.shape[0],):
            raise ValueError("nodes must be (N, 3) with matching (N,) weights")
        if np.any(weights <= 0.0):
            raise ValueError("quadrature weights must be positive")
        if abs(float(weights.sum()) - SPHERE_AREA) > QUAD_TOL:
            raise ValueError(f"weights must sum to 4pi, got {float(weights.sum())!r}")
        nodes.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)

    def integrate(self, values: np.ndarray) -> float:
        """Weighted sum of per-node integrand values."""
        return float(self.weights @ np.asarray(values, dtype=float))


def build_quadrature(order_theta: int, order_phi: int) -> SphereQuadrature:
    """Gauss-Legendre nodes in cos(theta) crossed with equispaced phi.

    Exact (up to rounding) for integrands of polynomial degree below
    2*order_theta in cos(theta) and azimuthal harmonics below order_phi,
    which covers every integrand in this module.
    """
    if order_theta < 2:
        raise ValueError(f"order_theta must be >= 2, got {order_theta}")
    if order_phi < 4:
        raise ValueError(f"order_phi must be >= 4, got {order_phi}")
    cos_theta, gl_weights = np.polynomial.legendre.leggauss(order_theta)
    phi = 2.0 * np.pi * np.arange(order_phi) / order_phi
    sin_theta = np.sqrt(1.0 - cos_theta**2)

    nodes = np.empty((order_theta * order_phi, 3))
    nodes[:, 0] = np.outer(sin_theta, np.cos(phi)).ravel()
    nodes[:, 1] = np.outer(sin_theta, np.sin(phi)).ravel()
    nodes[:, 2] = np.repeat(cos_theta, order_phi)
    weights = np.repeat(gl_weights * (2.0 * np.pi / order_phi), order_phi)
    return SphereQuadrature(nodes=nodes, weights=weights)


def malus_correlation_quadrature(
    dist: SignedSphereDistribution,
    a: Direction3,
    b: Direction3,
    quad: SphereQuadrature,
) -> float:
    """Numerical evaluation of the correlation integral.

    The atom component collapses to a single-sphere integral of
    (a.n)(b.(-n)); the uniform component is the product of two single-sphere
    cosine integrals. Matches the closed form to quadrature accuracy.
    """
    dot_a = quad.nodes @ a.as_array()
    dot_b = quad.nodes @ b.as_array()
    atom_term = dist.atom_weight / SPHERE_AREA * quad.integrate(dot_a * -dot_b)
    uniform_term = (
        dist.uniform_weight
        / SPHERE_AREA**2
        * quad.integrate(dot_a)
        * quad.integrate(dot_b)
    )
    return atom_term + uniform_term


@dataclass(frozen=True)
class MCEstimate:
    """Monte Carlo estimate: sample mean, its standard error, and provenance."""

    mean: float
    stderr: float
    n_samples: int
    seed: int

    def __post_init__(self) -> None:
        if self.n_samples < 1:
            raise ValueError(f"n_samples must be positive, got {self.n_samples}")
        if not (math.isfinite(self.stderr) and self.stderr >= 0.0):
            raise ValueError(f"stderr must be finite and >= 0, got {self.stderr!r}")


def estimate_from_values(values: np.ndarray, seed: int) -> MCEstimate:
    """Mean and standard error (sample std / sqrt(n)) of per-sample values."""
    n = int(values.size)
    mean = float(values.mean())
    stderr = float(values.std(ddof=1)) / math.sqrt(n) if n > 1 else 0.0
    return MCEstimate(mean=mean, stderr=stderr, n_samples=n, seed=seed)


def signed_mc_correlation(
    dist: SignedSphereDistribution,
    a: Direction3,
    b: Direction3,
    n: int,
    seed: int,
    workers: int = 1,
) -> MCEstimate:
    """Importance-sampled correlation under the signed mixture.

    With probability |atom_weight|/W (W the total absolute weight) a sample
    is an antiparallel atom pair, otherwise an independent uniform pair; the
    per-sample estimator sign(component) * W * (a.n_a)(b.n_b) is unbiased for
    the closed-form correlation. Deterministic for fixed (seed, workers).
    """
    if n < MIN_MC_SAMPLES:
        raise ValueError(f"n must be >= {MIN_MC_SAMPLES}, got {n}")
    total_weight = abs(dist.atom_weight) + abs(dist.uniform_weight)
    p_atom = abs(dist.atom_weight) / total_weight
    atom_sign = math.copysign(1.0, dist.atom_weight)
    uniform_sign = math.copysign(1.0, dist.uniform_weight)

    chunks = []
    for size, rng in zip(chunk_sizes(n, workers), chunk_generators(seed, workers)):
        chunks.append(
            kernels.signed_mixture_products(
                rng.random((5, size)),
                a.x, a.y, a.z, b.x, b.y, b.z,
                p_atom, total_weight, atom_sign, uniform_sign,
            )
        )
    return estimate_from_values(np.concatenate(chunks), seed)
