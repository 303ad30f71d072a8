"""Brute-force reference implementations.

These are the ground truth the closed-form paths are tested against: plain
enumeration and definition-chasing, no clever formulas.  Hard caps are
visible module constants and overruns raise :class:`ResourceCapError`; there
is deliberately no sampling fallback, because a sampled oracle is not an
oracle.
"""

from __future__ import annotations

from typing import Iterator

from .core import BooleanTensor, Shape, einstein_product
from .errors import ResourceCapError

__all__ = [
    "ENUM_CELL_CAP",
    "BRUTE_RANK_CAP",
    "enumerate_tensors",
    "tensor_ordinal",
    "tensor_from_ordinal",
    "brute_g_inverses",
    "brute_boolean_rank",
]

# 2**24 candidate values is the most any exhaustive sweep may touch
ENUM_CELL_CAP = 24

# brute rank search handles flattenings up to this many rows and columns
BRUTE_RANK_CAP = 4


def tensor_ordinal(t: BooleanTensor) -> int:
    """Position of t in enumeration order: the row-major bit string read as a
    binary numeral (first cell most significant)."""
    n = 0
    c = t.col_count
    for word in t.rows:
        for j in range(c):
            n = (n << 1) | ((word >> j) & 1)
    return n


def tensor_from_ordinal(shape: Shape, n: int) -> BooleanTensor:
    """Inverse of :func:`tensor_ordinal` for the given shape."""
    cells = shape.cells
    if not 0 <= n < (1 << cells):
        raise ValueError(f"ordinal {n} out of range for shape {shape}")
    c = shape.col_count
    rows = []
    for r in range(shape.row_count):
        word = 0
        for j in range(c):
            word |= ((n >> (cells - 1 - r * c - j)) & 1) << j
        rows.append(word)
    return BooleanTensor(shape, tuple(rows))


def enumerate_tensors(shape: Shape) -> Iterator[BooleanTensor]:
    """Yield every tensor of the shape exactly once, in ascending bit order
    (lexicographic on the row-major bit string)."""
    cells = shape.cells
    if cells > ENUM_CELL_CAP:
        raise ResourceCapError(
            f"shape {shape} has {cells} cells; enumeration is capped at {ENUM_CELL_CAP}"
        )
    for n in range(1 << cells):
        yield tensor_from_ordinal(shape, n)


def brute_g_inverses(a: BooleanTensor) -> list[BooleanTensor]:
    """Every x with a * x * a = a, ascending bit order, by exhaustive test."""
    xshape = Shape(a.col_dims, a.row_dims)
    out = []
    for x in enumerate_tensors(xshape):
        if einstein_product(einstein_product(a, x), a) == a:
            out.append(x)
    return out


def brute_boolean_rank(a: BooleanTensor) -> int:
    """Exact Boolean rank by exhaustive factorization search over increasing
    middle size.

    For each left factor the entrywise-largest right factor is computed
    directly from the definition (c[k, j] = AND over rows i using middle k of
    a[i, j]); an exact factorization through that left factor exists iff the
    largest right factor reproduces a.
    """
    nrows, ncols = a.row_count, a.col_count
    if nrows > BRUTE_RANK_CAP or ncols > BRUTE_RANK_CAP:
        raise ResourceCapError(
            f"flattening is {nrows}x{ncols}; brute rank search is capped at "
            f"{BRUTE_RANK_CAP}x{BRUTE_RANK_CAP}"
        )
    if all(w == 0 for w in a.rows):
        return 0
    full = (1 << ncols) - 1
    for r in range(1, min(nrows, ncols) + 1):
        for packed in range(1 << (nrows * r)):
            left = [(packed >> (i * r)) & ((1 << r) - 1) for i in range(nrows)]
            right = []
            for k in range(r):
                word = full
                for i in range(nrows):
                    if (left[i] >> k) & 1:
                        word &= a.rows[i]
                right.append(word)
            if all(
                _or_selected(right, left[i]) == a.rows[i] for i in range(nrows)
            ):
                return r
    raise AssertionError("unreachable: rank is at most min(rows, cols)")


def _or_selected(words: list[int], mask: int) -> int:
    acc = 0
    k = 0
    while mask:
        if mask & 1:
            acc |= words[k]
        mask >>= 1
        k += 1
    return acc
