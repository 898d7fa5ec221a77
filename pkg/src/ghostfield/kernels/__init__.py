"""Sampling kernels: compiled Cython core with a numpy fallback.

The compiled module `_fast` is preferred when it imported cleanly; otherwise
the numpy implementation is used. Setting the environment variable
``GHOSTFIELD_PURE_PYTHON`` to a nonzero value before import forces the numpy
backend. Both backends transform identical pre-drawn uniform arrays, so
results for a given seed agree to floating-point rounding regardless of
backend, and are bit-reproducible within one backend.
"""

import os

from . import _numpy

_force_python = os.environ.get("GHOSTFIELD_PURE_PYTHON", "").strip()
if _force_python and _force_python != "0":
    _impl = _numpy
    BACKEND = "numpy"
else:
    try:
        from . import _fast as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _numpy
        BACKEND = "numpy"

signed_mixture_products = _impl.signed_mixture_products
conditional_pair_outcomes = _impl.conditional_pair_outcomes


def backend_name() -> str:
    """Name of the kernel backend selected at import ("cython" or "numpy")."""
    return BACKEND
