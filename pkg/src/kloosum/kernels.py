"""Kernel backend selection.

The compiled extension (kloosum._kernels) is preferred; the NumPy fallback
(kloosum._kernels_py) is used when it is absent.  Set KLOOSUM_KERNELS to
"python" or "cython" to force a backend; forcing "cython" without the built
extension raises ImportError.
"""

from __future__ import annotations

import os

_forced = os.environ.get("KLOOSUM_KERNELS")

if _forced == "python":
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        if _forced == "cython":
            raise
        from . import _kernels_py as _impl

        BACKEND = "python"

naive_sum = _impl.naive_sum
convolution_pass = _impl.convolution_pass
bilinear_sum = _impl.bilinear_sum
brute_pair_count = _impl.brute_pair_count
block_terms = _impl.block_terms


def available_backends() -> dict[str, object]:
    """Importable kernel modules keyed by name (for benchmarks and tests)."""
    from . import _kernels_py

    out: dict[str, object] = {"python": _kernels_py}
    try:
        from . import _kernels  # type: ignore[attr-defined]

        out["cython"] = _kernels
    except ImportError:
        pass
    return out
