"""Histogram kernels for the exhaustive model checks.

The compiled extension is used when it was built; set
``TORICUBE_PURE_PYTHON=1`` to force the pure-Python fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

PAREN_STAT = _pykernels.PAREN_STAT
BRACKET_STAT = _pykernels.BRACKET_STAT
FORKS = _pykernels.FORKS
NC_STAT = _pykernels.NC_STAT
NC_BLOCKS = _pykernels.NC_BLOCKS
NC_FILLERS = _pykernels.NC_FILLERS

_compiled = None
if not os.environ.get("TORICUBE_PURE_PYTHON"):
    try:
        from . import _ckernels as _compiled
    except ImportError:
        _compiled = None

if _compiled is not None:
    BACKEND = "compiled"
    tree_histogram = _compiled.tree_histogram
    nc_histogram = _compiled.nc_histogram
else:
    BACKEND = "python"
    tree_histogram = _pykernels.tree_histogram
    nc_histogram = _pykernels.nc_histogram


def backends() -> dict:
    """Every available backend, keyed by name."""
    out = {"python": _pykernels}
    if _compiled is not None:
        out["compiled"] = _compiled
    return out
