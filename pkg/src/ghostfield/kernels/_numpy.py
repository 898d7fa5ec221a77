"""Vectorized numpy implementations of the sampling kernels.

Reference backend: always available, used when the compiled extension is
missing or disabled. Must stay semantically identical to `_fast.pyx`: both
map the same pre-drawn uniform arrays to the same outputs.
"""

from __future__ import annotations

import numpy as np

TWO_PI = 2.0 * np.pi


def signed_mixture_products(
    u: np.ndarray,
    ax: float,
    ay: float,
    az: float,
    bx: float,
    by: float,
    bz: float,
    p_atom: float,
    total_weight: float,
    atom_sign: float,
    uniform_sign: float,
) -> np.ndarray:
    """Per-sample estimator values for the signed two-component sphere mixture.

    `u` is a (5, n) array of uniforms in [0, 1). Row 0 selects the component:
    below `p_atom` the sample is an antiparallel atom pair (n_b = -n_a drawn
    from rows 1-2), otherwise n_a and n_b are independent uniform directions
    (rows 1-2 and 3-4). Each value is sign * total_weight * (a.n_a)(b.n_b).
    """
    if u.shape[0] != 5:
        raise ValueError("u must have shape (5, n)")
    u0, u1, u2, u3, u4 = u
    atom = u0 < p_atom

    za = 2.0 * u1 - 1.0
    pa = TWO_PI * u2
    sa = np.sqrt(1.0 - za * za)
    nax = sa * np.cos(pa)
    nay = sa * np.sin(pa)
    naz = za

    zb = 2.0 * u3 - 1.0
    pb = TWO_PI * u4
    sb = np.sqrt(1.0 - zb * zb)
    nbx = np.where(atom, -nax, sb * np.cos(pb))
    nby = np.where(atom, -nay, sb * np.sin(pb))
    nbz = np.where(atom, -naz, zb)

    sign = np.where(atom, atom_sign, uniform_sign)
    dot_a = ax * nax + ay * nay + az * naz
    dot_b = bx * nbx + by * nby + bz * nbz
    return sign * total_weight * dot_a * dot_b


def conditional_pair_outcomes(
    u: np.ndarray,
    p_plus_given_plus: float,
    p_plus_given_minus: float,
) -> tuple[np.ndarray, np.ndarray]:
    """Draw (lambda_b, lambda_a) pairs from a column-stochastic conditional.

    `u` is a (2, n) array of uniforms in [0, 1). lambda_b is +1 when row 0 is
    below 1/2; lambda_a is then drawn from the column of the conditional
    matrix selected by lambda_b. Returns two int8 arrays of +-1 values.
    """
    if u.shape[0] != 2:
        raise ValueError("u must have shape (2, n)")
    lam_b = np.where(u[0] < 0.5, 1, -1).astype(np.int8)
    p_plus = np.where(lam_b == 1, p_plus_given_plus, p_plus_given_minus)
    lam_a = np.where(u[1] < p_plus, 1, -1).astype(np.int8)
    return lam_b, lam_a
