"""Hot-kernel backend selection.

Two interchangeable implementations of the convolution/pooling kernels:

* ``jit``       - numba @njit loops (default when numba imports cleanly)
* ``reference`` - pure numpy (im2col + BLAS)

Set ``CANET_KERNELS=numpy`` or ``CANET_KERNELS=numba`` to force one; the
default ``auto`` prefers numba and silently falls back to numpy if numba
is unavailable. The choice is made once at import time.

``benchmarks/bench_kernels.py`` times the two backends against each
other; tests assert their numerical agreement.
"""

from __future__ import annotations

import os

from canet.errors import ConfigError

from . import reference

_requested = os.environ.get("CANET_KERNELS", "auto").lower()

if _requested == "numpy":
    _impl = reference
elif _requested in ("auto", "numba"):
    try:
        from . import jit as _impl  # type: ignore[no-redef]
    except ImportError:
        if _requested == "numba":
            raise
        _impl = reference
else:
    raise ConfigError(
        f"CANET_KERNELS must be 'auto', 'numba' or 'numpy', got {_requested!r}"
    )

backend_name: str = _impl.name

conv2d_forward = _impl.conv2d_forward
conv2d_backward_kernel = _impl.conv2d_backward_kernel
conv2d_backward_input = _impl.conv2d_backward_input
maxpool2d_forward = _impl.maxpool2d_forward
maxpool2d_backward = _impl.maxpool2d_backward
avgpool2d_forward = _impl.avgpool2d_forward
avgpool2d_backward = _impl.avgpool2d_backward
