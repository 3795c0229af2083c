"""Elimination-kernel backend selection.

TAYLORPADE_BACKEND=numpy forces the pure-numpy kernels, =numba requires the
jitted ones, unset/auto picks numba when it imports.  The two backends are
drop-in equivalents; benchmarks/bench_backends.py compares them.
"""

import os

_choice = os.environ.get("TAYLORPADE_BACKEND", "auto").strip().lower()

if _choice not in ("auto", "numba", "numpy"):
    raise RuntimeError(
        f"TAYLORPADE_BACKEND must be one of auto|numba|numpy, got {_choice!r}"
    )

if _choice == "numpy":
    from . import _kernels_numpy as kernels

    BACKEND = "numpy"
else:
    try:
        from . import _kernels_numba as kernels

        BACKEND = "numba"
    except ImportError:
        if _choice == "numba":
            raise
        from . import _kernels_numpy as kernels

        BACKEND = "numpy"
