"""Backend selection for the prime-field elimination kernels.

The compiled Cython extension is used when available; setting the
environment variable RANKMETRIC_PURE=1 forces the numpy fallback (useful
for testing and for the benchmark comparison).
"""

from __future__ import annotations

import os

from . import _gfkern_py

if os.environ.get("RANKMETRIC_PURE"):
    _impl = _gfkern_py
    BACKEND = "python"
else:
    try:
        from . import _gfkern as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        _impl = _gfkern_py
        BACKEND = "python"

rref_modp = _impl.rref_modp
rank_modp = _impl.rank_modp
batch_rank_modp = _impl.batch_rank_modp
inv_modp = _impl.inv_modp
