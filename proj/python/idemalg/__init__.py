"""Finite commutative semiring workbench.

Every function works on plain-dict documents in the same label-based formats
the ``idem`` command-line tool reads and writes: semirings as element lists
with row-major operation tables, spaces as point lists with open-set
families, lattices as element lists with order pairs.
"""

import json as _json

try:
    from ._idem import *  # noqa: F401,F403  (installed layout)
    from . import _idem as _native
except ImportError:  # build-tree layout: extension on sys.path, not in package
    from _idem import *  # noqa: F401,F403
    import _idem as _native

__all__ = [name for name in dir(_native) if not name.startswith("_")] + ["load"]


def load(path):
    """Read a JSON document from a file into a plain dict."""
    with open(path) as f:
        return _json.load(f)
