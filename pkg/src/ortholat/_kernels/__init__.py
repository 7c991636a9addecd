"""Hot loops over subsets and element pairs.

The numba path is used when numba imports and ``ORTHOLAT_DISABLE_JIT`` is
unset (or ``0``); otherwise the vectorised numpy path runs.  Both expose the
same functions and produce identical arrays.
"""
import os

from . import _numpy

JIT_DISABLED = os.environ.get("ORTHOLAT_DISABLE_JIT", "0") not in ("", "0")

if not JIT_DISABLED:
    try:
        from . import _numba as _impl
    except ImportError:  # pragma: no cover - numba is a declared dependency
        JIT_DISABLED = True
        _impl = _numpy
else:
    _impl = _numpy

BACKEND = "numpy" if JIT_DISABLED else "numba"

transitive_closure = _impl.transitive_closure
bound_tables = _impl.bound_tables
subset_fold = _impl.subset_fold
downset_masks = _impl.downset_masks
closure_violation = _impl.closure_violation
distributive_flags = _impl.distributive_flags
submasks = _numpy.submasks

__all__ = [
    "BACKEND",
    "JIT_DISABLED",
    "transitive_closure",
    "bound_tables",
    "subset_fold",
    "downset_masks",
    "closure_violation",
    "distributive_flags",
    "submasks",
]
