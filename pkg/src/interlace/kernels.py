"""Backend selection for the hot kernels.

The compiled extension is used when it imports; ``INTERLACE_PURE_PYTHON=1``
forces the pure-Python fallback.
"""

from __future__ import annotations

import os

from interlace import _pykernels
from interlace._pykernels import SearchLimit

if os.environ.get("INTERLACE_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from interlace import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernels

BACKEND: str = _impl.BACKEND
adjacency_rows = _impl.adjacency_rows
hom_search = _impl.hom_search


def available_backends() -> dict:
    out = {"python": _pykernels}
    try:
        from interlace import _ckernels
    except ImportError:
        pass
    else:
        out["cython"] = _ckernels
    return out


__all__ = ["BACKEND", "SearchLimit", "adjacency_rows", "hom_search", "available_backends"]
