"""Kernel selection.

The compiled extension is used when it imports and ``RTW_PURE`` is unset;
otherwise the pure-Python kernels are used. Both give identical results.
"""
from __future__ import annotations

import os

from . import _pure

BACKEND = "python"
kkt_scan = _pure.kkt_scan
max_clique = _pure.max_clique
find_clique = _pure.find_clique

if not os.environ.get("RTW_PURE"):
    try:
        from . import _speedups
    except ImportError:  # extension not built
        _speedups = None
    if _speedups is not None:
        BACKEND = "cython"
        kkt_scan = _speedups.kkt_scan
        max_clique = _speedups.max_clique
        find_clique = _speedups.find_clique


def kernels(name: str):
    """Return ``(kkt_scan, max_clique, find_clique)`` for ``"python"`` or ``"cython"``."""
    if name == "python":
        return _pure.kkt_scan, _pure.max_clique, _pure.find_clique
    from . import _speedups as ext

    return ext.kkt_scan, ext.max_clique, ext.find_clique
