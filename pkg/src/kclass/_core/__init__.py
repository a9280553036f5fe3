"""Enumeration engine: backend selection plus shared array helpers.

The compiled extension (``_speedups``) is preferred; the numpy fallback
(``pybackend``) implements the same contracts.  Setting the environment
variable ``KCLASS_PURE_PYTHON`` forces the fallback.
"""

import os

import numpy as np

from . import pybackend

if os.environ.get("KCLASS_PURE_PYTHON"):
    _impl = pybackend
else:
    try:
        from . import _speedups as _impl
    except ImportError:
        _impl = pybackend

BACKEND = _impl.BACKEND_NAME

closure_raw = _impl.closure
conjugation_maps = _impl.conjugation_maps
row_lookup = pybackend.row_lookup


def available_backends():
    """Names of importable backends (for tests and benchmarks)."""
    names = {"python": pybackend}
    try:
        from . import _speedups
        names["compiled"] = _speedups
    except ImportError:
        pass
    return names


def lex_sort_rows(mat):
    """Rows sorted lexicographically (the canonical element order)."""
    mat = np.ascontiguousarray(mat, dtype=np.uint8)
    if mat.shape[0] <= 1:
        return mat.copy()
    order = np.argsort(pybackend._void_view(mat), kind="stable")
    return np.ascontiguousarray(mat[order])


def closure_sorted(gens, cap, impl=None):
    """Closure of the generators, returned in canonical (lexicographic) order."""
    raw = (impl or _impl).closure(gens, cap)
    return lex_sort_rows(raw)


def orbit_labels(maps, m):
    """Connected-component labels of the union of the index maps.

    Labels are renumbered by first occurrence, so label 0 is the component
    of row 0 and labels increase with the smallest row index they contain.
    """
    if not maps:
        return np.arange(m, dtype=np.int64), m
    from scipy.sparse import coo_matrix
    from scipy.sparse.csgraph import connected_components

    src = np.tile(np.arange(m, dtype=np.int64), len(maps))
    dst = np.concatenate(maps)
    graph = coo_matrix(
        (np.ones(src.shape[0], dtype=np.int8), (src, dst)), shape=(m, m)
    )
    _, labels = connected_components(graph, directed=False)
    # renumber so that components are ordered by their minimal row index
    first = np.unique(labels, return_index=True)[1]
    order = np.argsort(first, kind="stable")
    renum = np.empty_like(order)
    renum[order] = np.arange(order.shape[0])
    return renum[labels], order.shape[0]
