"""Zone-scan kernel dispatch.

Imports the compiled extension when it is available, otherwise falls back to
the NumPy implementation.  Set ZCACS_PURE=1 in the environment to force the
fallback (the benchmark uses this to compare backends).
"""

from __future__ import annotations

import os

if os.environ.get("ZCACS_PURE"):
    from zcacs import _kernels_py as _impl

    BACKEND = "pure"
else:
    try:
        from zcacs import _ckernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from zcacs import _kernels_py as _impl

        BACKEND = "pure"

zone_corr_float = _impl.zone_corr_float
zone_corr_exact = _impl.zone_corr_exact
