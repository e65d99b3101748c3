"""Hot-path kernels with a compiled core and a pure-numpy fallback.

The backend is chosen once at import time. By default the compiled
extension is used when present and the numpy implementation otherwise;
set RXKIT_KERNELS=numpy or RXKIT_KERNELS=native to force a backend
(forcing `native` raises if the extension was not built).

Both backends satisfy the contract documented in ``_numpy`` and produce
identical outputs, so everything layered on top of them behaves the same
regardless of which one is active.
"""

from __future__ import annotations

import os

_requested = os.environ.get("RXKIT_KERNELS", "auto")
if _requested not in ("auto", "native", "numpy"):
    raise ImportError(
        f"RXKIT_KERNELS must be 'auto', 'native' or 'numpy', got {_requested!r}"
    )

if _requested == "numpy":
    from . import _numpy as _impl

    BACKEND = "numpy"
else:
    try:
        from . import _native as _impl  # type: ignore[no-redef]

        BACKEND = "native"
    except ImportError:
        if _requested == "native":
            raise
        from . import _numpy as _impl  # type: ignore[no-redef]

        BACKEND = "numpy"

demap_square = _impl.demap_square
error_magnitudes = _impl.error_magnitudes
count_bit_errors = _impl.count_bit_errors

__all__ = ["BACKEND", "demap_square", "error_magnitudes", "count_bit_errors"]
