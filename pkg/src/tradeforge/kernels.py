"""Selection of the permanent kernel: compiled extension when available and
safe, pure Python otherwise.

Set TRADEFORGE_PURE=1 to force the pure path (used by the benchmark and to
exercise the fallback in tests).
"""

from __future__ import annotations

import os

from . import _kernels_py

try:
    from . import _ryser as _compiled
except ImportError:  # extension not built
    _compiled = None

HAVE_COMPILED = _compiled is not None

# Signed 128-bit headroom for every intermediate the compiled kernel forms.
_I128_LIMIT = 1 << 126
_I64_LIMIT = 1 << 62


def _force_pure() -> bool:
    return os.environ.get("TRADEFORGE_PURE") == "1"


def fits_compiled(rows) -> bool:
    """A-priori overflow bound for the compiled kernel.

    Every Ryser partial product is at most P = prod_i (sum_j |a_ij|) in
    magnitude and the running total is at most 2^n * P, so demanding
    2^n * P < 2^126 (plus int64 entries) makes the whole run exact.
    """
    n = len(rows)
    if n > 62:
        return False
    bound = 1
    for r in rows:
        s = 0
        for v in r:
            if abs(v) >= _I64_LIMIT:
                return False
            s += abs(v)
        bound *= max(s, 1)
    return (bound << n) < _I128_LIMIT


def ryser_permanent(rows) -> int:
    """Exact permanent of a square integer matrix (list of row lists)."""
    if HAVE_COMPILED and not _force_pure() and fits_compiled(rows):
        return _compiled.ryser_permanent(rows)
    return _kernels_py.ryser_permanent(rows)


def ryser_permanent_pure(rows) -> int:
    return _kernels_py.ryser_permanent(rows)


def ryser_permanent_compiled(rows) -> int:
    if not HAVE_COMPILED:
        raise RuntimeError("compiled kernel is not available")
    if not fits_compiled(rows):
        raise OverflowError("input exceeds the compiled kernel's 128-bit bound")
    return _compiled.ryser_permanent(rows)
