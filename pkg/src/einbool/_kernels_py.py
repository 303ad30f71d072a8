"""Pure-Python bit kernels.

A Boolean matrix is passed around as a tuple of ints, one per row; bit ``c``
of ``rows[r]`` is the entry at (row r, column c).  Arbitrary-width rows ride
on Python's big ints, so the same code serves 2x2 desk examples and packed
1024-column flattenings.

The compiled twin (``einbool._kernels_c``) implements the same two functions;
``einbool._backend`` picks whichever is available.
"""

from __future__ import annotations


def matmul(a_rows: tuple[int, ...], b_rows: tuple[int, ...], b_ncols: int) -> tuple[int, ...]:
    """Boolean matrix product: OR together the rows of b selected by each row of a.

    ``a`` must have exactly ``len(b_rows)`` columns; ``b_ncols`` is the column
    count of ``b`` (unused here, kept for signature parity with the compiled
    kernel, which needs it to size its word buffers).
    """
    out = []
    for bits in a_rows:
        acc = 0
        while bits:
            low = bits & -bits
            acc |= b_rows[low.bit_length() - 1]
            bits ^= low
        out.append(acc)
    return tuple(out)


def transpose_bits(rows: tuple[int, ...], ncols: int) -> tuple[int, ...]:
    """Bit-transpose: result has ``ncols`` rows of ``len(rows)`` bits each."""
    out = [0] * ncols
    for i, bits in enumerate(rows):
        ibit = 1 << i
        while bits:
            low = bits & -bits
            out[low.bit_length() - 1] |= ibit
            bits ^= low
    return tuple(out)
