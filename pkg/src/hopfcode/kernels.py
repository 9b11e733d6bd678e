"""Selects the GF(p) kernel backend at import time.

The compiled extension is used when it was built; otherwise the pure-Python
module is used.  Setting ``HOPFCODE_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os

from hopfcode import _pykernels

_impl = _pykernels
BACKEND = "python"

if not os.environ.get("HOPFCODE_PURE_PYTHON"):
    try:
        from hopfcode import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        pass

_CKERNEL_MAX_P = 3037000499


def rref_mod_p(rows, ncols, p):
    if p >= _CKERNEL_MAX_P:
        return _pykernels.rref_mod_p(rows, ncols, p)
    return _impl.rref_mod_p(rows, ncols, p)


def matmul_mod_p(a, b, p):
    if p >= _CKERNEL_MAX_P:
        return _pykernels.matmul_mod_p(a, b, p)
    return _impl.matmul_mod_p(a, b, p)
