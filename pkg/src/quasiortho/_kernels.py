"""Kernel backend selection: compiled extension if built, pure Python otherwise.

Set QUASIORTHO_PURE_KERNELS=1 to force the pure-Python kernels (used by the
benchmark and the backend-equivalence tests).
"""

from __future__ import annotations

import os

if os.environ.get("QUASIORTHO_PURE_KERNELS"):
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels_c as _impl  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:
        from . import _kernels_py as _impl  # type: ignore[no-redef]

        BACKEND = "python"

sign_at = _impl.sign_at
sign_at_inf = _impl.sign_at_inf
variations = _impl.variations
chain_variations_at = _impl.chain_variations_at
chain_variations_at_inf = _impl.chain_variations_at_inf
refine_bisect = _impl.refine_bisect
