"""Pure-Python (numpy) implementations of the enumeration kernels.

Used when the compiled extension is unavailable or when the environment
variable ``KCLASS_PURE_PYTHON`` is set.  Same contracts as the compiled
kernels in ``_speedups``: rows are uint8 image vectors, one permutation
per row.
"""

import numpy as np

from ..errors import CapExceededError, NotClosedError

BACKEND_NAME = "python"


def _void_view(mat):
    """View each row of a C-contiguous uint8 matrix as one opaque scalar.

    Byte order of uint8 rows equals lexicographic order on images, so void
    comparisons agree with the canonical encoding order.
    """
    mat = np.ascontiguousarray(mat)
    return mat.view(np.dtype((np.void, mat.shape[1]))).ravel()


def closure(gens, cap):
    """Breadth-first closure of the generators under composition.

    Returns an (m, n) uint8 matrix in discovery order.  Raises
    CapExceededError as soon as the closure is known to hold more than
    ``cap`` elements.
    """
    gens = np.ascontiguousarray(gens, dtype=np.uint8)
    n = gens.shape[1]
    identity = np.arange(n, dtype=np.uint8)[None, :]
    if cap < 1:
        raise CapExceededError(cap)
    if gens.shape[0] == 0:
        return identity.copy()

    elems = identity.copy()
    keys = _void_view(elems).copy()
    order = np.argsort(keys)
    keys = keys[order]
    frontier = identity.copy()

    while frontier.shape[0]:
        cand = np.concatenate([g[frontier] for g in gens])
        ck = _void_view(cand)
        ck_unique, first = np.unique(ck, return_index=True)
        pos = np.searchsorted(keys, ck_unique)
        pos_c = np.minimum(pos, keys.shape[0] - 1)
        fresh = keys[pos_c] != ck_unique
        if not fresh.any():
            break
        new_rows = cand[first[fresh]]
        if elems.shape[0] + new_rows.shape[0] > cap:
            raise CapExceededError(cap)
        elems = np.concatenate([elems, new_rows])
        keys = np.insert(keys, pos[fresh], ck_unique[fresh])
        frontier = new_rows

    return elems


def conjugation_maps(elems, gens):
    """Index maps of the conjugation action g -> a * g * a^-1 on a closed set.

    ``elems`` must be lexicographically sorted and closed under conjugation
    by every generator; a conjugate falling outside raises NotClosedError.
    Returns one int64 index array per generator.
    """
    elems = np.ascontiguousarray(elems, dtype=np.uint8)
    keys = _void_view(elems)
    m = elems.shape[0]
    maps = []
    for a in gens:
        a = np.asarray(a, dtype=np.uint8)
        a_inv = np.empty_like(a)
        a_inv[a] = np.arange(a.shape[0], dtype=np.uint8)
        conj = a_inv[elems[:, a]]
        ck = _void_view(conj)
        idx = np.searchsorted(keys, ck)
        idx_c = np.minimum(idx, m - 1)
        if not (keys[idx_c] == ck).all():
            raise NotClosedError("set is not closed under conjugation by the given generators")
        maps.append(idx_c.astype(np.int64))
    return maps


def row_lookup(elems, rows):
    """Indices of ``rows`` inside the sorted matrix ``elems`` (-1 if absent)."""
    elems = np.ascontiguousarray(elems, dtype=np.uint8)
    rows = np.ascontiguousarray(rows, dtype=np.uint8)
    keys = _void_view(elems)
    rk = _void_view(rows)
    idx = np.searchsorted(keys, rk)
    idx_c = np.minimum(idx, keys.shape[0] - 1)
    out = np.where(keys[idx_c] == rk, idx_c, -1)
    return out.astype(np.int64)
