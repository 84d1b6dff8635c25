"""Hot numerical kernels, compiled when available.

``EFL_PURE_PYTHON=1`` forces the numpy fallback.
"""
import os

from . import _pykernels as python_kernels

try:
    from . import _ckernels as compiled_kernels
except ImportError:  # extension not built
    compiled_kernels = None

if compiled_kernels is not None and not os.environ.get("EFL_PURE_PYTHON"):
    BACKEND = "cython"
    _impl = compiled_kernels
else:
    BACKEND = "python"
    _impl = python_kernels

loggamma = _impl.loggamma
hurwitz_weighted = _impl.hurwitz_weighted
em_cutoff = _impl.em_cutoff

__all__ = ["BACKEND", "loggamma", "hurwitz_weighted", "em_cutoff",
           "python_kernels", "compiled_kernels"]
