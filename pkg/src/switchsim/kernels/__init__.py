"""Greedy-forwarding kernel with backend selection at import time.

The compiled extension is used when present; setting SWITCHSIM_PURE_PYTHON=1
(or a failed build) selects the numpy fallback.  Both backends produce
identical routes.
"""

import os

from ._greedy_py import DEST_HOP, STATUS_EMPTY_SECTOR, STATUS_NO_PROGRESS, STATUS_OK

if os.environ.get("SWITCHSIM_PURE_PYTHON"):
    from ._greedy_py import greedy_route

    BACKEND = "python"
else:
    try:
        from ._greedy_cy import greedy_route

        BACKEND = "cython"
    except ImportError:
        from ._greedy_py import greedy_route

        BACKEND = "python"

__all__ = [
    "BACKEND",
    "DEST_HOP",
    "STATUS_EMPTY_SECTOR",
    "STATUS_NO_PROGRESS",
    "STATUS_OK",
    "greedy_route",
]
