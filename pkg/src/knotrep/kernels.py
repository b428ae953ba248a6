"""Backend selection for the numeric kernels.

The compiled extension is used when it was built; otherwise, or when
``KNOTREP_PURE_PYTHON`` is set to a non-empty value, the pure-Python
module is used.  Both expose ``li2``, ``li2_many``, ``potential`` and
``log_gradient`` with identical semantics.
"""

import os

from . import _kernels_py

if os.environ.get("KNOTREP_PURE_PYTHON"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

li2 = _impl.li2
li2_many = _impl.li2_many
potential = _impl.potential
log_gradient = _impl.log_gradient
clog = _kernels_py.clog


def backends() -> dict:
    """Every importable backend by name, for cross-checking and benchmarks."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels
        out["cython"] = _kernels
    except ImportError:
        pass
    return out
