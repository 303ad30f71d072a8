# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled bit kernels.

Same contract as ``einbool._kernels_py``: matrices travel as tuples of row
ints.  Matrices whose rows fit one machine word (the desk-scale exhaustive
suites) take an all-C fast path; wider matrices are packed into word arrays
through ``int.to_bytes`` so the inner loops still run in C.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc
from libc.stdint cimport uint64_t
from libc.string cimport memcpy, memset

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #  define EB_CTZ64(x) ((int)__builtin_ctzll(x))
    #else
    static int EB_CTZ64(unsigned long long x)
    { int n = 0; while (!(x & 1ULL)) { x >>= 1; ++n; } return n; }
    #endif
    """
    int EB_CTZ64(uint64_t x)


def matmul(a_rows, b_rows, b_ncols):
    """Boolean matrix product: OR together the rows of b selected by each row of a."""
    cdef Py_ssize_t n_b = len(b_rows)
    if n_b <= 64 and <Py_ssize_t> b_ncols <= 64:
        return _matmul_word(a_rows, b_rows)
    return _matmul_wide(a_rows, b_rows, b_ncols)


def transpose_bits(rows, ncols):
    """Bit-transpose: result has ``ncols`` rows of ``len(rows)`` bits each."""
    cdef Py_ssize_t n = len(rows)
    if n <= 64 and <Py_ssize_t> ncols <= 64:
        return _transpose_word(rows, ncols)
    return _transpose_wide(rows, ncols)


cdef _matmul_word(a_rows, b_rows):
    cdef Py_ssize_t n_a = len(a_rows)
    cdef Py_ssize_t n_b = len(b_rows)
    cdef uint64_t b[64]
    cdef uint64_t acc, arow, low
    cdef Py_ssize_t i, k
    for k in range(n_b):
        b[k] = <uint64_t> b_rows[k]
    out = []
    for i in range(n_a):
        arow = <uint64_t> a_rows[i]
        acc = 0
        while arow:
            low = arow & (~arow + 1)
            acc |= b[EB_CTZ64(low)]
            arow ^= low
        out.append(acc)
    return tuple(out)


cdef _transpose_word(rows, ncols):
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t c = <Py_ssize_t> ncols
    cdef uint64_t out[64]
    cdef uint64_t word, low, ibit
    cdef Py_ssize_t i
    memset(out, 0, sizeof(out))
    for i in range(n):
        word = <uint64_t> rows[i]
        ibit = (<uint64_t> 1) << i
        while word:
            low = word & (~word + 1)
            out[EB_CTZ64(low)] |= ibit
            word ^= low
    result = []
    for i in range(c):
        result.append(out[i])
    return tuple(result)


cdef uint64_t* _pack(rows, Py_ssize_t nwords) except NULL:
    """Copy Python row ints into a freshly allocated little-endian word array."""
    cdef Py_ssize_t n = len(rows)
    cdef uint64_t* buf = <uint64_t*> PyMem_Malloc(max(n * nwords, 1) * sizeof(uint64_t))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    cdef const unsigned char[:] view
    for i in range(n):
        raw = rows[i].to_bytes(nwords * 8, "little")
        view = raw
        memcpy(&buf[i * nwords], &view[0], nwords * 8)
    return buf


cdef _unpack_row(uint64_t* words, Py_ssize_t nwords):
    raw = bytes((<const unsigned char*> words)[: nwords * 8])
    return int.from_bytes(raw, "little")


cdef _matmul_wide(a_rows, b_rows, b_ncols):
    cdef Py_ssize_t n_a = len(a_rows)
    cdef Py_ssize_t n_b = len(b_rows)
    cdef Py_ssize_t wa = (n_b + 63) >> 6
    cdef Py_ssize_t wb = (<Py_ssize_t> b_ncols + 63) >> 6
    cdef uint64_t* a = _pack(a_rows, wa)
    cdef uint64_t* b = NULL
    cdef uint64_t* acc = NULL
    cdef Py_ssize_t i, w, k, j
    cdef uint64_t word, low
    out = []
    try:
        b = _pack(b_rows, wb)
        acc = <uint64_t*> PyMem_Malloc(wb * sizeof(uint64_t))
        if acc == NULL:
            raise MemoryError()
        for i in range(n_a):
            memset(acc, 0, wb * sizeof(uint64_t))
            for w in range(wa):
                word = a[i * wa + w]
                while word:
                    low = word & (~word + 1)
                    k = (w << 6) + EB_CTZ64(low)
                    for j in range(wb):
                        acc[j] |= b[k * wb + j]
                    word ^= low
            out.append(_unpack_row(acc, wb))
    finally:
        PyMem_Free(a)
        PyMem_Free(b)
        PyMem_Free(acc)
    return tuple(out)


cdef _transpose_wide(rows, ncols):
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t c = <Py_ssize_t> ncols
    cdef Py_ssize_t win = (c + 63) >> 6
    cdef Py_ssize_t wout = (n + 63) >> 6
    cdef uint64_t* src = _pack(rows, win)
    cdef uint64_t* dst = NULL
    cdef Py_ssize_t i, w, j
    cdef uint64_t word, low
    try:
        dst = <uint64_t*> PyMem_Malloc(max(c * wout, 1) * sizeof(uint64_t))
        if dst == NULL:
            raise MemoryError()
        memset(dst, 0, c * wout * sizeof(uint64_t))
        for i in range(n):
            for w in range(win):
                word = src[i * win + w]
                while word:
                    low = word & (~word + 1)
                    j = (w << 6) + EB_CTZ64(low)
                    dst[j * wout + (i >> 6)] |= (<uint64_t> 1) << (i & 63)
                    word ^= low
        result = []
        for j in range(c):
            result.append(_unpack_row(dst + j * wout, wout))
        return tuple(result)
    finally:
        PyMem_Free(src)
        PyMem_Free(dst)
