"""Hot loops, compiled when possible.

The Cython build of ``_scan`` is preferred; if it is missing (no compiler at
install time) or ``PFHULL_PURE=1`` is set, the pure-Python ``_scan_py`` with
the same signature is used instead.  ``BACKEND`` names the one in use.
"""

import os

from . import _scan_py

if os.environ.get("PFHULL_PURE") == "1":
    _scan_c = None
else:
    try:
        from . import _scan as _scan_c
    except ImportError:
        _scan_c = None

if _scan_c is not None:
    count_points = _scan_c.count_points
    BACKEND = "cython"
else:
    count_points = _scan_py.count_points
    BACKEND = "python"

count_points_py = _scan_py.count_points
count_points_c = None if _scan_c is None else _scan_c.count_points

__all__ = ["count_points", "count_points_py", "count_points_c", "BACKEND"]
