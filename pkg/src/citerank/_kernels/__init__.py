"""Hot-kernel backend selection.

Prefers the compiled Cython module; falls back to pure numpy when the
extension is missing or when the CITERANK_PURE environment variable is set
to a non-empty value. `BACKEND` names the active implementation.
"""

from __future__ import annotations

import os

from . import _pure

if os.environ.get("CITERANK_PURE"):
    _impl = _pure
else:
    try:
        from . import _fast as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

BACKEND = "pure" if _impl is _pure else "cython"

count_pairs = _impl.count_pairs
matvec = _impl.matvec

__all__ = ["BACKEND", "count_pairs", "matvec"]
