"""Kernel selection.

The compiled kernels are used when the extension imported and the graph has
at most 64 vertices; otherwise the pure-Python versions run.  Setting
``TANGLE4_PURE_PYTHON=1`` forces the fallback everywhere.
"""

import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

if os.environ.get("TANGLE4_PURE_PYTHON") == "1":
    _ckernels = None

COMPILED = _ckernels is not None
WORD_BITS = 64


def backend(n):
    if _ckernels is not None and n <= WORD_BITS:
        return _ckernels
    return _pykernels


def components(adj, n, removed):
    return backend(n).components(adj, n, removed)


def find_cover(sides, adj, n):
    return backend(n).find_cover(sides, adj, n)


def find_cover_with(x, sides, adj, n):
    return backend(n).find_cover_with(x, sides, adj, n)
