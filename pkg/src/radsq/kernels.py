"""Kernel backend selection.

The compiled extension is used when it imports; setting ``RADSQ_PURE=1`` in
the environment forces the pure-Python fallback.  ``BACKEND`` names the
active choice.
"""
from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("RADSQ_PURE"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

rref_mod_p = _impl.rref_mod_p
closed_walk_weight_masks = _impl.closed_walk_weight_masks

__all__ = ["BACKEND", "rref_mod_p", "closed_walk_weight_masks"]
