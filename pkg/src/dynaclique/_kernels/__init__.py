"""Hot-loop kernels with backend selection at import time.

The compiled Cython backend is used when it was built; otherwise the
pure-Python module serves the same functions. Set the environment variable
``DYNACLIQUE_PURE_KERNELS=1`` before import to force the pure backend
(used by the benchmark harness to compare the two).
"""

import os

from . import pure as _pure

if os.environ.get("DYNACLIQUE_PURE_KERNELS"):
    _impl = _pure
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

BACKEND = "pure" if _impl is _pure else "compiled"

contains_sorted = _impl.contains_sorted
intersect_sorted = _impl.intersect_sorted
union_sorted = _impl.union_sorted
issubset_sorted = _impl.issubset_sorted
insert_sorted = _impl.insert_sorted

__all__ = [
    "BACKEND",
    "contains_sorted",
    "insert_sorted",
    "intersect_sorted",
    "issubset_sorted",
    "union_sorted",
]
