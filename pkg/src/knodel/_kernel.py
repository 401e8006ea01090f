"""Select the BFS kernel backend at import time.

The compiled extension is used when it was built; set
``KNODEL_PURE_PYTHON=1`` to force the pure-Python kernels.
"""
import os

from . import _bfs_py

if os.environ.get("KNODEL_PURE_PYTHON"):
    _impl = _bfs_py
else:
    try:
        from . import _bfs_ext as _impl
    except ImportError:  # extension not built
        _impl = _bfs_py

BACKEND = "python" if _impl is _bfs_py else "cython"
bfs = _impl.bfs
all_pairs_max = _impl.all_pairs_max
