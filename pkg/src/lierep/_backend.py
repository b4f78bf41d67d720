"""Pick the compiled kernel when it is importable, else the pure-Python one.

Set ``LIEREP_PURE_PYTHON=1`` to force the fallback.
"""

import os

from lierep._kernels_py import BudgetExceeded
from lierep._kernels_py import Kernel as PyKernel

try:
    from lierep._kernels import Kernel as CKernel
except ImportError:  # extension not built
    CKernel = None

# fixed-size scratch buffers in the compiled kernel
MAX_COMPILED_RANK = 64

BACKEND = "cython" if CKernel is not None and not os.environ.get("LIEREP_PURE_PYTHON") else "python"


def make_kernel(cartan, roots, coroots, gram, gram_scale, backend=None):
    backend = backend or BACKEND
    if backend == "cython":
        if CKernel is None:
            raise ImportError("compiled kernel is not available")
        if len(cartan) <= MAX_COMPILED_RANK:
            return CKernel(cartan, roots, coroots, gram, gram_scale)
    return PyKernel(cartan, roots, coroots, gram, gram_scale)


__all__ = ["BACKEND", "BudgetExceeded", "CKernel", "PyKernel", "make_kernel"]
