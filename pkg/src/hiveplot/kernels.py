"""Kernel backend selection.

Imports the compiled extension when present, otherwise the pure-Python
fallback.  Set HIVEPLOT_PURE=1 to force the fallback (used by the kernel
benchmark and to debug suspected extension issues).  Both backends are
exact and interchangeable; only speed differs.
"""

from __future__ import annotations

import os

if os.environ.get("HIVEPLOT_PURE"):
    from ._kernels_py import count_inversions

    BACKEND = "python"
else:
    try:
        from ._kernels import count_inversions  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from ._kernels_py import count_inversions  # type: ignore[no-redef]

        BACKEND = "python"

__all__ = ["count_inversions", "BACKEND"]
