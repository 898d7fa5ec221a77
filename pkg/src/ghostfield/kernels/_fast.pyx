# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled sampling kernels.

Hot per-sample loops behind the Monte Carlo estimators. Semantics must match
`_numpy` exactly: same uniform-array layout, same arithmetic, same outputs up
to floating-point rounding.
"""

from libc.math cimport M_PI, cos, sin, sqrt

import numpy as np

cdef double TWO_PI = 2.0 * M_PI


def signed_mixture_products(
    double[:, ::1] u,
    double ax, double ay, double az,
    double bx, double by, double bz,
    double p_atom, double total_weight,
    double atom_sign, double uniform_sign,
):
    """Per-sample estimator values for the signed two-component sphere mixture.

    See `ghostfield.kernels._numpy.signed_mixture_products` for the contract.
    """
    if u.shape[0] != 5:
        raise ValueError("u must have shape (5, n)")
    cdef Py_ssize_t n = u.shape[1]
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    cdef double za, pa, sa, nax, nay, naz
    cdef double zb, pb, sb, nbx, nby, nbz
    cdef double sign, dot_a, dot_b
    with nogil:
        for i in range(n):
            za = 2.0 * u[1, i] - 1.0
            pa = TWO_PI * u[2, i]
            sa = sqrt(1.0 - za * za)
            nax = sa * cos(pa)
            nay = sa * sin(pa)
            naz = za
            if u[0, i] < p_atom:
                nbx = -nax
                nby = -nay
                nbz = -naz
                sign = atom_sign
            else:
                zb = 2.0 * u[3, i] - 1.0
                pb = TWO_PI * u[4, i]
                sb = sqrt(1.0 - zb * zb)
                nbx = sb * cos(pb)
                nby = sb * sin(pb)
                nbz = zb
                sign = uniform_sign
            dot_a = ax * nax + ay * nay + az * naz
            dot_b = bx * nbx + by * nby + bz * nbz
            out[i] = sign * total_weight * dot_a * dot_b
    return out_arr


def conditional_pair_outcomes(
    double[:, ::1] u,
    double p_plus_given_plus,
    double p_plus_given_minus,
):
    """Draw (lambda_b, lambda_a) pairs from a column-stochastic conditional.

    See `ghostfield.kernels._numpy.conditional_pair_outcomes` for the contract.
    """
    if u.shape[0] != 2:
        raise ValueError("u must have shape (2, n)")
    cdef Py_ssize_t n = u.shape[1]
    lam_b_arr = np.empty(n, dtype=np.int8)
    lam_a_arr = np.empty(n, dtype=np.int8)
    cdef signed char[::1] lam_b = lam_b_arr
    cdef signed char[::1] lam_a = lam_a_arr
    cdef Py_ssize_t i
    cdef double p_plus
    with nogil:
        for i in range(n):
            if u[0, i] < 0.5:
                lam_b[i] = 1
                p_plus = p_plus_given_plus
            else:
                lam_b[i] = -1
                p_plus = p_plus_given_minus
            lam_a[i] = 1 if u[1, i] < p_plus else -1
    return lam_b_arr, lam_a_arr
