"""Kernel selection: compiled extension when available, pure Python otherwise.

Set TREEGARDEN_PURE_PYTHON=1 (or call force_pure_python) to pin the pure
implementation; the benchmark script uses this to compare the two. Metric
kernels in the extension use 64-bit edge sets, so graphs with more than 64
edges are always routed to the pure implementation.
"""

import os

from . import _pykernel

try:
    from . import _speedups
except ImportError:  # extension not built; pure fallback
    _speedups = None

_force_pure = bool(os.environ.get("TREEGARDEN_PURE_PYTHON"))


def force_pure_python(enabled=True):
    """Pin the pure-Python kernels regardless of extension availability."""
    global _force_pure
    _force_pure = bool(enabled)


def have_speedups():
    return _speedups is not None


def active_implementation():
    return "python" if (_force_pure or _speedups is None) else "c"


def _impl(fast_ok=True):
    if fast_ok and not _force_pure and _speedups is not None:
        return _speedups
    return _pykernel


def run_enumeration(n, m, eu, ev, parent, parent_edge, depth, tree_edges, callback, limit):
    return _impl().run_enumeration(
        n, m, eu, ev, parent, parent_edge, depth, tree_edges, callback, limit
    )


def fcb_weight(n, m, eu, ev, parent, depth, tree_edges):
    return _impl(m <= 64).fcb_weight(n, m, eu, ev, parent, depth, tree_edges)


def tree_diameter(n, parent, depth):
    return _impl(n <= 64).tree_diameter(n, parent, depth)


def total_path_length(n, parent, depth):
    return _impl(n <= 64).total_path_length(n, parent, depth)


def intersection_number(n, m, eu, ev, parent, parent_edge, depth, tree_edges):
    return _impl(m <= 64).intersection_number(
        n, m, eu, ev, parent, parent_edge, depth, tree_edges
    )
