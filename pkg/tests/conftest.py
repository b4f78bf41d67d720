import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lierep._backend import CKernel, PyKernel  # noqa: E402

BACKENDS = [PyKernel] + ([CKernel] if CKernel is not None else [])


@pytest.fixture(params=BACKENDS, ids=lambda k: k.backend)
def kernel_cls(request):
    return request.param


def make(kernel_cls, rs):
    """Fresh kernel of the given class over the data of ``rs``."""
    base = rs.kernel
    return kernel_cls(base.cartan, base.roots, base.coroots, base.gram, base.gram_scale)
