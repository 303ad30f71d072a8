"""Boolean tensor values and the primitive algebra.

A tensor of shape (I1..IM, J1..JN) is stored dense and bit-packed: one Python
int per flattened row, bit c of row r holding the entry at row multi-index r,
column multi-index c (both row-major, last index fastest).  Under that
flattening the Einstein product *_N is exactly the Boolean matrix product of
the two flattenings, which is what the bit kernels compute.

Everything here is immutable and every operation is a pure function, so the
module is safe to use from multiple threads without locking.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Iterable, Sequence, Union

from ._backend import matmul, transpose_bits
from .errors import ConsistencyError, ShapeError

__all__ = [
    "Shape",
    "BooleanTensor",
    "PropertyFlags",
    "make_tensor",
    "zeros",
    "ones",
    "identity",
    "permutation_tensor",
    "einstein_product",
    "add",
    "transpose",
    "complement",
    "leq",
    "trace",
    "weight",
    "closure",
    "block_compose",
    "vec",
    "classify",
]

BitsLike = Union[str, Iterable[int]]


def _as_dims(dims: Sequence[int], what: str) -> tuple[int, ...]:
    out = tuple(dims)
    for d in out:
        if not isinstance(d, int) or isinstance(d, bool) or d < 1:
            raise ShapeError(f"{what} must be positive integers, got {out}")
    return out


@dataclass(frozen=True)
class Shape:
    """Ordered row dimensions I1..IM and column dimensions J1..JN.

    N = 0 (no column dimensions) encodes a vector-like tensor living only in
    the row group, as used for range-space membership.
    """

    row_dims: tuple[int, ...]
    col_dims: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "row_dims", _as_dims(self.row_dims, "row_dims"))
        object.__setattr__(self, "col_dims", _as_dims(self.col_dims, "col_dims"))
        if not self.row_dims:
            raise ShapeError("row_dims must be nonempty")

    @property
    def row_count(self) -> int:
        return prod(self.row_dims)

    @property
    def col_count(self) -> int:
        return prod(self.col_dims)  # empty product = 1

    @property
    def cells(self) -> int:
        return self.row_count * self.col_count

    @property
    def is_square(self) -> bool:
        return self.row_dims == self.col_dims

    def transposed(self) -> "Shape":
        if not self.col_dims:
            raise ShapeError(f"cannot transpose a vector-like tensor of shape {self}")
        return Shape(self.col_dims, self.row_dims)

    def __str__(self) -> str:
        r = ",".join(map(str, self.row_dims))
        c = ",".join(map(str, self.col_dims))
        return f"([{r}],[{c}])"


def _parse_bits(bits: BitsLike) -> list[int]:
    if isinstance(bits, str):
        # grid notation like "10|01" is accepted; separators carry no meaning
        cleaned = bits.replace("|", "").replace(" ", "").replace("\n", "")
        if not set(cleaned) <= {"0", "1"}:
            raise ShapeError(f"bit string may contain only 0/1 and separators, got {bits!r}")
        return [int(ch) for ch in cleaned]
    out = []
    for b in bits:
        if b not in (0, 1):
            raise ShapeError(f"bit values must be 0 or 1, got {b!r}")
        out.append(int(b))
    return out


def _lin(dims: tuple[int, ...], coords: Sequence[int]) -> int:
    """Row-major flat index (0-based) of 1-based coords, last index fastest."""
    idx = 0
    for d, c in zip(dims, coords):
        idx = idx * d + (c - 1)
    return idx


def _check_coords(dims: tuple[int, ...], coords: Sequence[int], what: str) -> None:
    if len(coords) != len(dims):
        raise ShapeError(f"{what} must have {len(dims)} coordinates, got {len(coords)}")
    for d, c in zip(dims, coords):
        if not 1 <= c <= d:
            raise ShapeError(f"{what} coordinate {c} out of range [1,{d}]")


@dataclass(frozen=True)
class BooleanTensor:
    """Dense Boolean tensor over a row group x column group multi-index.

    ``rows[r]`` packs row r of the flattening; instances are immutable and
    compare by value.
    """

    shape: Shape
    rows: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        if len(self.rows) != self.shape.row_count:
            raise ShapeError(
                f"expected {self.shape.row_count} rows for shape {self.shape}, got {len(self.rows)}"
            )
        mask = (1 << self.shape.col_count) - 1
        for r in self.rows:
            if not isinstance(r, int) or r < 0 or r & ~mask:
                raise ShapeError(f"row word {r!r} does not fit {self.shape.col_count} columns")

    @property
    def row_dims(self) -> tuple[int, ...]:
        return self.shape.row_dims

    @property
    def col_dims(self) -> tuple[int, ...]:
        return self.shape.col_dims

    @property
    def row_count(self) -> int:
        return self.shape.row_count

    @property
    def col_count(self) -> int:
        return self.shape.col_count

    @property
    def bits(self) -> str:
        """Row-major bit string, the canonical serialization payload."""
        c = self.col_count
        return "".join(format(r, f"0{c}b")[::-1] for r in self.rows)

    def entry(self, row_index: Sequence[int], col_index: Sequence[int] = ()) -> int:
        """Entry at a pair of 1-based multi-indices."""
        _check_coords(self.row_dims, row_index, "row index")
        _check_coords(self.col_dims, col_index, "column index")
        r = _lin(self.row_dims, row_index)
        c = _lin(self.col_dims, col_index)
        return (self.rows[r] >> c) & 1

    def reshape(self, row_dims: Sequence[int], col_dims: Sequence[int]) -> "BooleanTensor":
        """Regroup the modes without moving bits.

        The products of the new row and column dimensions must equal the old
        row and column counts, so the flattening (and therefore every product)
        is unchanged.
        """
        new = Shape(tuple(row_dims), tuple(col_dims))
        if new.row_count != self.row_count or new.col_count != self.col_count:
            raise ShapeError(f"cannot reshape {self.shape} to {new}: flattened extents differ")
        return BooleanTensor(new, self.rows)

    def __matmul__(self, other: "BooleanTensor") -> "BooleanTensor":
        return einstein_product(self, other)

    def __or__(self, other: "BooleanTensor") -> "BooleanTensor":
        return add(self, other)

    def __invert__(self) -> "BooleanTensor":
        return complement(self)

    def __le__(self, other: "BooleanTensor"):
        if not isinstance(other, BooleanTensor):
            return NotImplemented
        return leq(self, other)

    def __ge__(self, other: "BooleanTensor"):
        if not isinstance(other, BooleanTensor):
            return NotImplemented
        return leq(other, self)

    def __repr__(self) -> str:
        c = self.col_count
        grid = "|".join(format(r, f"0{c}b")[::-1] for r in self.rows)
        return f"BooleanTensor({self.shape} {grid})"


@dataclass(frozen=True)
class PropertyFlags:
    """Structural classification of a square tensor; all flags are False for
    non-square shapes."""

    symmetric: bool
    idempotent: bool
    orthogonal: bool
    diagonal: bool
    permutation: bool

    def __post_init__(self):
        if self.permutation and not self.orthogonal:
            raise ConsistencyError("permutation tensor must be orthogonal")


def make_tensor(shape: Shape, bits: BitsLike) -> BooleanTensor:
    """Build a tensor from its row-major bit sequence.

    ``bits`` may be a 0/1 string (separators ``|`` and whitespace are ignored,
    so grid notation like ``"10|01"`` works) or an iterable of 0/1 ints.
    """
    values = _parse_bits(bits)
    if len(values) != shape.cells:
        raise ShapeError(f"shape {shape} needs {shape.cells} bits, got {len(values)}")
    c = shape.col_count
    rows = []
    for r in range(shape.row_count):
        word = 0
        for j in range(c):
            word |= values[r * c + j] << j
        rows.append(word)
    return BooleanTensor(shape, tuple(rows))


def zeros(shape: Shape) -> BooleanTensor:
    return BooleanTensor(shape, (0,) * shape.row_count)


def ones(shape: Shape) -> BooleanTensor:
    """The tensor with every entry 1 (the complement of the zero tensor)."""
    full = (1 << shape.col_count) - 1
    return BooleanTensor(shape, (full,) * shape.row_count)


def identity(dims: Sequence[int]) -> BooleanTensor:
    """Identity tensor on (dims, dims): entry 1 iff the two multi-indices agree."""
    d = _as_dims(dims, "dims")
    if not d:
        raise ShapeError("identity needs at least one dimension")
    n = prod(d)
    return BooleanTensor(Shape(d, d), tuple(1 << i for i in range(n)))


def permutation_tensor(pi: Sequence[int], dims: Sequence[int]) -> BooleanTensor:
    """Tensor of a bijection on the flattened index set.

    ``pi`` lists 1-based images: position i (1-based) maps to ``pi[i-1]``.
    Entry (i, j) is 1 iff pi sends i to j, so the result satisfies
    P * P^T = P^T * P = I.
    """
    d = _as_dims(dims, "dims")
    n = prod(d)
    images = tuple(pi)
    if len(images) != n or sorted(images) != list(range(1, n + 1)):
        raise ShapeError(f"pi must be a bijection on 1..{n}, got {images}")
    return BooleanTensor(Shape(d, d), tuple(1 << (t - 1) for t in images))


def einstein_product(a: BooleanTensor, b: BooleanTensor) -> BooleanTensor:
    """Contract a's column group against b's row group over the Boolean semiring.

    Conformability requires the exact dimension list match
    ``a.col_dims == b.row_dims``; equal products are not enough, because the
    contraction is defined mode-wise.  Use :meth:`BooleanTensor.reshape` first
    to flatten deliberately.
    """
    if a.col_dims != b.row_dims:
        raise ShapeError(f"cannot contract {a.shape} with {b.shape}: column group "
                         f"{list(a.col_dims)} != row group {list(b.row_dims)}")
    rows = matmul(a.rows, b.rows, b.col_count)
    return BooleanTensor(Shape(a.row_dims, b.col_dims), rows)


def add(a: BooleanTensor, b: BooleanTensor) -> BooleanTensor:
    """Entrywise OR; idempotent since 1 + 1 = 1."""
    if a.shape != b.shape:
        raise ShapeError(f"cannot add shapes {a.shape} and {b.shape}")
    return BooleanTensor(a.shape, tuple(x | y for x, y in zip(a.rows, b.rows)))


def transpose(a: BooleanTensor) -> BooleanTensor:
    """Swap the row and column groups."""
    if not a.col_dims:
        raise ShapeError(f"cannot transpose vector-like shape {a.shape}")
    rows = transpose_bits(a.rows, a.col_count)
    return BooleanTensor(a.shape.transposed(), rows)


def complement(a: BooleanTensor) -> BooleanTensor:
    """Entrywise bit flip."""
    full = (1 << a.col_count) - 1
    return BooleanTensor(a.shape, tuple(r ^ full for r in a.rows))


def leq(a: BooleanTensor, b: BooleanTensor) -> bool:
    """Entrywise order; equivalent to add(a, b) == b."""
    if a.shape != b.shape:
        raise ShapeError(f"cannot order shapes {a.shape} and {b.shape}")
    return all(x & ~y == 0 for x, y in zip(a.rows, b.rows))


def trace(a: BooleanTensor) -> int:
    """Number of diagonal 1-entries.

    Returned as a plain count rather than a semiring sum; the semiring sum
    would collapse to a single bit and lose the diagonal multiplicity.
    """
    if not a.shape.is_square:
        raise ShapeError(f"trace needs row_dims == col_dims, got {a.shape}")
    return sum((r >> i) & 1 for i, r in enumerate(a.rows))


def weight(a: BooleanTensor) -> int:
    """Number of 1-entries."""
    return sum(r.bit_count() for r in a.rows)


def closure(a: BooleanTensor) -> BooleanTensor:
    """Sum of all positive powers of a square tensor.

    Computed as a * t where t is the fixpoint of repeated squaring of
    (identity + a); the squaring loop is capped at row_count iterations
    (longer than any path) and the fixpoint is then asserted.
    """
    if not a.shape.is_square:
        raise ShapeError(f"closure needs row_dims == col_dims, got {a.shape}")
    n = a.row_count
    t = tuple(r | (1 << i) for i, r in enumerate(a.rows))
    for _ in range(max(1, n)):
        squared = matmul(t, t, n)
        if squared == t:
            break
        t = squared
    if matmul(t, t, n) != t:
        raise ConsistencyError("closure accumulator did not reach a fixpoint")
    return BooleanTensor(a.shape, matmul(a.rows, t, n))


def _coords_iter(dims: tuple[int, ...]):
    return itertools.product(*(range(d) for d in dims))


def _lin0(dims: tuple[int, ...], coords: Sequence[int]) -> int:
    idx = 0
    for d, c in zip(dims, coords):
        idx = idx * d + c
    return idx


def _place_block(rows: list[int], dims_r: tuple[int, ...], dims_c: tuple[int, ...],
                 src: BooleanTensor, shift_r: tuple[int, ...], shift_c: tuple[int, ...]) -> None:
    """OR src into the block of a zeroed (dims_r, dims_c) grid at the given
    per-mode offsets."""
    col_c = src.col_count
    for rc in _coords_iter(src.row_dims):
        word = src.rows[_lin0(src.row_dims, rc)]
        if not word:
            continue
        dest_r = _lin0(dims_r, tuple(x + s for x, s in zip(rc, shift_r)))
        for j in range(col_c):
            if (word >> j) & 1:
                cc = []
                rem = j
                for d in reversed(src.col_dims):
                    cc.append(rem % d)
                    rem //= d
                cc.reverse()
                dest_c = _lin0(dims_c, tuple(x + s for x, s in zip(cc, shift_c)))
                rows[dest_r] |= 1 << dest_c


def block_compose(kind: str, a: BooleanTensor, b: BooleanTensor) -> BooleanTensor:
    """Two-block composition.

    ``row``      [a b]: same row group; column dims add mode-wise, the second
                 block's column indices are shifted by a's column dims, and
                 positions mixing the two index ranges are 0.
    ``column``   [a; b] = ([a^T b^T])^T.
    ``diagonal`` [[a 0], [0 b]]: both groups add mode-wise.

    Larger layouts are built by folding this two-block form.
    """
    if kind == "column":
        return transpose(block_compose("row", transpose(a), transpose(b)))
    if kind == "row":
        if a.row_dims != b.row_dims:
            raise ShapeError(f"row block needs equal row groups, got {a.shape} and {b.shape}")
        if len(a.col_dims) != len(b.col_dims) or not a.col_dims:
            raise ShapeError(f"row block needs column groups of equal nonzero order, "
                             f"got {a.shape} and {b.shape}")
        dims_r = a.row_dims
        dims_c = tuple(x + y for x, y in zip(a.col_dims, b.col_dims))
        zero_r = (0,) * len(dims_r)
        shifts = ((a, zero_r, (0,) * len(dims_c)), (b, zero_r, a.col_dims))
    elif kind == "diagonal":
        if len(a.row_dims) != len(b.row_dims) or len(a.col_dims) != len(b.col_dims) \
                or not a.col_dims:
            raise ShapeError(f"diagonal block needs groups of equal order, "
                             f"got {a.shape} and {b.shape}")
        dims_r = tuple(x + y for x, y in zip(a.row_dims, b.row_dims))
        dims_c = tuple(x + y for x, y in zip(a.col_dims, b.col_dims))
        shifts = ((a, (0,) * len(dims_r), (0,) * len(dims_c)), (b, a.row_dims, a.col_dims))
    else:
        raise ShapeError(f"unknown block kind {kind!r}, expected row, column or diagonal")

    shape = Shape(dims_r, dims_c)
    rows = [0] * shape.row_count
    for src, sr, sc in shifts:
        _place_block(rows, dims_r, dims_c, src, sr, sc)
    return BooleanTensor(shape, tuple(rows))


def vec(a: BooleanTensor) -> BooleanTensor:
    """Line up the subtensors a_(i1..iM | :) in a column.

    The t-th subblock (t = row-major position of the row multi-index) is the
    corresponding slice of a, so under this library's layout the bit stream is
    unchanged and only the shape moves: all modes become row modes.
    """
    shape = Shape(a.row_dims + a.col_dims, ())
    c = a.col_count
    rows = []
    for word in a.rows:
        rows.extend((word >> j) & 1 for j in range(c))
    return BooleanTensor(shape, tuple(rows))


def classify(a: BooleanTensor) -> PropertyFlags:
    """Decide each structural flag by its defining equation.

    All definitions require a square shape (row_dims == col_dims); for any
    other shape every flag is False.
    """
    if not a.shape.is_square:
        return PropertyFlags(False, False, False, False, False)
    at = transpose(a)
    ident = identity(a.row_dims)
    symmetric = at == a
    idempotent = einstein_product(a, a) == a
    orthogonal = einstein_product(a, at) == ident and einstein_product(at, a) == ident
    diagonal = all(r & ~(1 << i) == 0 for i, r in enumerate(a.rows))
    permutation = all(r.bit_count() == 1 for r in a.rows) and all(
        r.bit_count() == 1 for r in at.rows
    )
    return PropertyFlags(symmetric, idempotent, orthogonal, diagonal, permutation)
