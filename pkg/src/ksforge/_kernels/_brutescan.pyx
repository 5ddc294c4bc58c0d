# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled exhaustive scan over 0/1 vertex assignments.

Accepts up to 30 vertices (edge masks fit in 32 bits) and any number of
edges; returns the accepted assignment masks in increasing order.
"""

from libc.stdint cimport uint32_t, uint64_t
from libc.stdlib cimport free, malloc


cdef extern from *:
    int __builtin_popcount(unsigned int) nogil


def scan(edge_masks, int nvert):
    """Return all a in [0, 2**nvert) with popcount(a & m) == 1 for every m."""
    if nvert < 0 or nvert > 30:
        raise ValueError("scan supports at most 30 vertices")
    cdef int ne = len(edge_masks)
    cdef uint32_t* masks = <uint32_t*> malloc(ne * sizeof(uint32_t) if ne else sizeof(uint32_t))
    if masks == NULL:
        raise MemoryError()
    cdef int i
    for i in range(ne):
        masks[i] = <uint32_t> edge_masks[i]

    cdef uint64_t total = (<uint64_t> 1) << nvert
    cdef uint64_t a
    cdef uint32_t aa
    cdef int e, ok
    out = []
    try:
        for a in range(total):
            aa = <uint32_t> a
            ok = 1
            for e in range(ne):
                if __builtin_popcount(aa & masks[e]) != 1:
                    ok = 0
                    break
            if ok:
                out.append(a)
    finally:
        free(masks)
    return out
