# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels for the two hot loops: breadth-first closure of a
generator set under composition, and index maps of the conjugation action
on a closed, sorted element matrix.

Rows are uint8 image vectors (one permutation per row, degree <= 255).
Contracts match kclass._core.pybackend exactly.
"""

import numpy as np

from ..errors import CapExceededError, NotClosedError

BACKEND_NAME = "compiled"

cdef unsigned long long FNV_OFFSET = <unsigned long long>14695981039346656037
cdef unsigned long long FNV_PRIME = <unsigned long long>1099511628211


cdef inline unsigned long long _hash_row(const unsigned char[:, ::1] buf,
                                         Py_ssize_t row, Py_ssize_t n) noexcept:
    cdef unsigned long long h = FNV_OFFSET
    cdef Py_ssize_t x
    for x in range(n):
        h = (h ^ <unsigned long long>buf[row, x]) * FNV_PRIME
    return h


cdef inline unsigned long long _hash_vec(const unsigned char[::1] w,
                                         Py_ssize_t n) noexcept:
    cdef unsigned long long h = FNV_OFFSET
    cdef Py_ssize_t x
    for x in range(n):
        h = (h ^ <unsigned long long>w[x]) * FNV_PRIME
    return h


def closure(object gens_obj, long long cap):
    """All products of the generators, by BFS from the identity.

    Returns an (m, n) uint8 array in discovery order; raises
    CapExceededError once more than ``cap`` elements exist.
    """
    gens_np = np.ascontiguousarray(gens_obj, dtype=np.uint8)
    if gens_np.ndim != 2:
        raise ValueError("generator matrix must be 2-D")
    cdef const unsigned char[:, ::1] G = gens_np
    cdef Py_ssize_t ng = G.shape[0]
    cdef Py_ssize_t n = G.shape[1]
    if cap < 1:
        raise CapExceededError(cap)

    cdef Py_ssize_t capacity = 1024
    buf_np = np.empty((capacity, n), dtype=np.uint8)
    cdef unsigned char[:, ::1] buf = buf_np

    cdef Py_ssize_t tsize = 4096
    table_np = np.full(tsize, -1, dtype=np.int64)
    cdef long long[::1] table = table_np
    cdef unsigned long long mask = <unsigned long long>(tsize - 1)

    w_np = np.empty(n, dtype=np.uint8)
    cdef unsigned char[::1] w = w_np

    cdef Py_ssize_t count = 0, head = 0
    cdef Py_ssize_t i, j, x, idx
    cdef unsigned long long h, slot
    cdef bint found, same

    for x in range(n):
        buf[0, x] = <unsigned char>x
    h = _hash_row(buf, 0, n)
    table[<Py_ssize_t>(h & mask)] = 0
    count = 1
    if ng == 0:
        return buf_np[:1].copy()

    while head < count:
        for j in range(ng):
            for x in range(n):
                w[x] = G[j, buf[head, x]]
            h = _hash_vec(w, n)
            slot = h & mask
            found = False
            while table[<Py_ssize_t>slot] != -1:
                idx = <Py_ssize_t>table[<Py_ssize_t>slot]
                same = True
                for x in range(n):
                    if buf[idx, x] != w[x]:
                        same = False
                        break
                if same:
                    found = True
                    break
                slot = (slot + 1) & mask
            if not found:
                if count >= cap:
                    raise CapExceededError(cap)
                if count == capacity:
                    capacity = capacity * 2
                    new_buf = np.empty((capacity, n), dtype=np.uint8)
                    new_buf[:count] = buf_np[:count]
                    buf_np = new_buf
                    buf = buf_np
                for x in range(n):
                    buf[count, x] = w[x]
                table[<Py_ssize_t>slot] = count
                count += 1
                if 2 * count >= tsize:
                    tsize = tsize * 2
                    table_np = np.full(tsize, -1, dtype=np.int64)
                    table = table_np
                    mask = <unsigned long long>(tsize - 1)
                    for i in range(count):
                        h = _hash_row(buf, i, n)
                        slot = h & mask
                        while table[<Py_ssize_t>slot] != -1:
                            slot = (slot + 1) & mask
                        table[<Py_ssize_t>slot] = i
        head += 1

    return buf_np[:count].copy()


cdef inline bint _row_less(const unsigned char[:, ::1] E, Py_ssize_t row,
                           const unsigned char[::1] w, Py_ssize_t n) noexcept:
    cdef Py_ssize_t x
    for x in range(n):
        if E[row, x] < w[x]:
            return True
        if E[row, x] > w[x]:
            return False
    return False


cdef inline bint _row_eq(const unsigned char[:, ::1] E, Py_ssize_t row,
                         const unsigned char[::1] w, Py_ssize_t n) noexcept:
    cdef Py_ssize_t x
    for x in range(n):
        if E[row, x] != w[x]:
            return False
    return True


def conjugation_maps(object elems_obj, object gens_obj):
    """Index maps i -> position of a * elems[i] * a^-1 for each generator a.

    ``elems`` must be lexicographically sorted and conjugation-closed;
    otherwise NotClosedError is raised.
    """
    elems_np = np.ascontiguousarray(elems_obj, dtype=np.uint8)
    cdef const unsigned char[:, ::1] E = elems_np
    cdef Py_ssize_t m = E.shape[0]
    cdef Py_ssize_t n = E.shape[1]
    gens_np = np.ascontiguousarray(gens_obj, dtype=np.uint8)

    cdef const unsigned char[::1] a
    cdef unsigned char[::1] ainv, w
    cdef long long[::1] mp
    cdef Py_ssize_t i, x, lo, hi, mid

    ainv_np = np.empty(n, dtype=np.uint8)
    w_np = np.empty(n, dtype=np.uint8)

    out = []
    for arow in gens_np:
        a_np = np.ascontiguousarray(arow, dtype=np.uint8)
        a = a_np
        ainv = ainv_np
        w = w_np
        for x in range(n):
            ainv[a[x]] = <unsigned char>x
        mp_np = np.empty(m, dtype=np.int64)
        mp = mp_np
        for i in range(m):
            for x in range(n):
                w[x] = ainv[E[i, a[x]]]
            lo = 0
            hi = m
            while lo < hi:
                mid = (lo + hi) >> 1
                if _row_less(E, mid, w, n):
                    lo = mid + 1
                else:
                    hi = mid
            if lo == m or not _row_eq(E, lo, w, n):
                raise NotClosedError(
                    "set is not closed under conjugation by the given generators")
            mp[i] = lo
        out.append(mp_np)
    return out
