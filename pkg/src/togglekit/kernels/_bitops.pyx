# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitset kernels for posets of at most 64 elements.

Same contract as pybitops; masks travel as Python ints at the border and
as uint64 inside the loops.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc


cdef uint64_t* _as_array(seq, Py_ssize_t n) except NULL:
    cdef uint64_t* out = <uint64_t*> malloc(n * sizeof(uint64_t))
    if out == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = seq[i]
    return out


def enumerate_ideals(int size, lower_masks):
    """All down-closed masks in the same order as the pure kernel."""
    if size > 64:
        raise ValueError(f"compiled kernel limited to 64 elements, got {size}")
    cdef uint64_t* lows = _as_array(lower_masks, size)
    cdef Py_ssize_t cap = 1024
    cdef uint64_t* found = <uint64_t*> malloc(cap * sizeof(uint64_t))
    if found == NULL:
        free(lows)
        raise MemoryError()
    found[0] = 0
    cdef Py_ssize_t count = 1, i, j, fresh
    cdef uint64_t low, bit
    try:
        for i in range(size):
            low = lows[i]
            bit = (<uint64_t> 1) << i
            fresh = 0
            for j in range(count):
                if found[j] & low == low:
                    fresh += 1
            while count + fresh > cap:
                cap *= 2
                found = <uint64_t*> realloc_or_die(found, cap)
            fresh = count
            for j in range(count):
                if found[j] & low == low:
                    found[fresh] = found[j] | bit
                    fresh += 1
            count = fresh
        return [found[j] for j in range(count)]
    finally:
        free(lows)
        free(found)


cdef uint64_t* realloc_or_die(uint64_t* block, Py_ssize_t cap) except NULL:
    cdef uint64_t* out = <uint64_t*> malloc(cap * sizeof(uint64_t))
    if out == NULL:
        free(block)
        raise MemoryError()
    # old contents fit in the first half by construction
    cdef Py_ssize_t i
    for i in range(cap // 2):
        out[i] = block[i]
    free(block)
    return out


def toggle(mask, low, up, bit):
    cdef uint64_t m = mask, lo = low, u = up, b = bit
    if m & lo == lo and m & u == 0:
        return m ^ b
    return m


def sweep(mask, order, lower_masks, upper_masks):
    cdef uint64_t m = mask, low
    cdef Py_ssize_t k, i
    for k in range(len(order)):
        i = order[k]
        low = lower_masks[i]
        if m & low == low and m & <uint64_t> upper_masks[i] == 0:
            m ^= (<uint64_t> 1) << i
    return m


def sweep_many(masks, order, lower_masks, upper_masks):
    cdef Py_ssize_t n = len(masks), p = len(lower_masks), steps = len(order)
    cdef uint64_t* data = _as_array(masks, n)
    cdef uint64_t* lows = NULL
    cdef uint64_t* ups = NULL
    cdef int* seq = NULL
    cdef Py_ssize_t i, k
    cdef uint64_t m, low, bit
    try:
        lows = _as_array(lower_masks, p)
        ups = _as_array(upper_masks, p)
        seq = <int*> malloc(steps * sizeof(int))
        if seq == NULL:
            raise MemoryError()
        for k in range(steps):
            seq[k] = order[k]
        for i in range(n):
            m = data[i]
            for k in range(steps):
                low = lows[seq[k]]
                if m & low == low and m & ups[seq[k]] == 0:
                    m ^= (<uint64_t> 1) << seq[k]
            data[i] = m
        return [data[i] for i in range(n)]
    finally:
        free(data)
        if lows != NULL:
            free(lows)
        if ups != NULL:
            free(ups)
        if seq != NULL:
            free(seq)
