"""Backend selection for the mod-p hot loops.

The compiled extension is used when it imports and ``ECSUM_PURE_PYTHON`` is
unset; otherwise the pure-Python module provides the same functions.
"""

import os

from . import _pykernel

_native = None
if not os.environ.get("ECSUM_PURE_PYTHON"):
    try:
        from . import _ckernel as _native
    except ImportError:  # extension not built
        _native = None

_impl = _native if _native is not None else _pykernel

BACKEND = "cython" if _native is not None else "python"

CASE_CHORD = _pykernel.CASE_CHORD
CASE_TANGENT = _pykernel.CASE_TANGENT
CASE_VERTICAL = _pykernel.CASE_VERTICAL

inv_mod = _impl.inv_mod
ec_add = _impl.ec_add
det_mod = _impl.det_mod
minors_mod = _impl.minors_mod
