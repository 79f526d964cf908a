"""Backend selection for the hot kernels.

The compiled extension is used when it was built and imports cleanly;
setting ``EXOTIC_PURE_PYTHON=1`` forces the pure-Python fallback.
"""

import os

from . import _kernels_py

try:
    if os.environ.get("EXOTIC_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure Python requested")
    from . import _ckernels as _impl
    BACKEND = "cython"
except ImportError:
    _impl = _kernels_py
    BACKEND = "python"

character_gram = _impl.character_gram
orienting_masks = _impl.orienting_masks

__all__ = ["BACKEND", "character_gram", "orienting_masks", "_kernels_py"]
