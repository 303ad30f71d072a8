"""Space decomposition, Boolean rank, and their regularity consequences.

A space decomposition a = left * right splits a through a middle index group
while preserving both ranges (range(a) = range(left) and range(a^T) =
range(right^T)); it certifies regularity and yields generalized inverses from
the factors.  Boolean rank is the least middle size over exact factorizations,
computed here by an exact rectangle-cover search on the flattening.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Optional, Sequence

from .core import BooleanTensor, Shape, einstein_product, transpose
from .errors import CertificateError, ConsistencyError, ResourceCapError, ShapeError
from .ginverse import check_g_axioms, max_g_inverse
from .oracle import enumerate_tensors
from .residuation import range_equal, solve_right

__all__ = [
    "SpaceDecomposition",
    "RankCertificate",
    "MIDDLE_SEARCH_CAP",
    "RANK_SEARCH_CAP",
    "verify_space_decomposition",
    "search_space_decomposition",
    "g_inverse_from_decomposition",
    "boolean_rank",
    "is_regular_by_rank",
]

# exhaustive decomposition search allows middle groups up to this product
MIDDLE_SEARCH_CAP = 4

# exact rank search handles flattenings up to this many rows and columns
RANK_SEARCH_CAP = 8


def _check_factor_shapes(a: BooleanTensor, f: BooleanTensor, r: BooleanTensor) -> None:
    if f.row_dims != a.row_dims or r.col_dims != a.col_dims or f.col_dims != r.row_dims:
        raise ShapeError(
            f"factors {f.shape} * {r.shape} do not compose to shape {a.shape}"
        )


@dataclass(frozen=True)
class SpaceDecomposition:
    """Verified factor pair: construction checks both range certificates, so a
    held instance is always a genuine space decomposition of left * right."""

    left: BooleanTensor
    right: BooleanTensor

    def __post_init__(self):
        if self.left.col_dims != self.right.row_dims:
            raise ShapeError(
                f"factors {self.left.shape} and {self.right.shape} do not compose"
            )
        a = self.composed
        if not range_equal(a, self.left):
            raise CertificateError("left factor does not span the product's range")
        if not range_equal(transpose(a), transpose(self.right)):
            raise CertificateError("right factor does not span the product's transposed range")

    @property
    def middle_dims(self) -> tuple[int, ...]:
        return self.left.col_dims

    @property
    def composed(self) -> BooleanTensor:
        return einstein_product(self.left, self.right)


@dataclass(frozen=True)
class RankCertificate:
    """Boolean rank plus, for nonzero tensors, a witness factor pair whose
    middle size equals the rank.  The search procedure guarantees no
    factorization with a smaller middle exists."""

    rank: int
    witness: Optional[tuple[BooleanTensor, BooleanTensor]]


def verify_space_decomposition(a: BooleanTensor, f: BooleanTensor, r: BooleanTensor) -> bool:
    """Do f and r space-decompose a?  Checks the product and both range
    equalities."""
    _check_factor_shapes(a, f, r)
    if einstein_product(f, r) != a:
        return False
    return range_equal(a, f) and range_equal(transpose(a), transpose(r))


def search_space_decomposition(
    a: BooleanTensor, middle_dims: Sequence[int], cap: int = MIDDLE_SEARCH_CAP
) -> Optional[SpaceDecomposition]:
    """Exhaustively search for a space decomposition through the given middle
    group; None when there is none.

    Deterministic: candidates are scanned in ascending bit order, so the
    lexicographically first left factor (and then right factor) wins.
    """
    middle = Shape(tuple(middle_dims)).row_dims
    if prod(middle) > cap:
        raise ResourceCapError(
            f"middle group {list(middle)} has product {prod(middle)}, cap is {cap}"
        )
    right_shape = Shape(middle, a.col_dims)
    for f in enumerate_tensors(Shape(a.row_dims, middle)):
        # no exact right factor exists unless the residuated maximum works
        if not solve_right(f, a).solvable:
            continue
        for r in enumerate_tensors(right_shape):
            if verify_space_decomposition(a, f, r):
                return SpaceDecomposition(f, r)
    return None


def g_inverse_from_decomposition(a: BooleanTensor, d: SpaceDecomposition) -> BooleanTensor:
    """right^(1) * left^(1) for the factor inverses induced by the
    decomposition.

    A space decomposition certifies that a is regular; any generalized
    inverse x of a then induces factor inverses right * x (for the left
    factor) and x * left (for the right factor).  Those witnesses, and only
    witnesses of that kind, satisfy the companion identities
    (right * x) * a = right and a * (x * left) = left; the factors' own
    maximum inverses do not in general, so the derivation must run through
    an inverse of the composed tensor.  Their product is x * a * x, a
    reflexive generalized inverse of a.  The companion identities are
    asserted for the witnesses used.
    """
    _check_factor_shapes(a, d.left, d.right)
    if d.composed != a:
        raise CertificateError(f"decomposition composes to a different tensor than {a.shape}")
    x = max_g_inverse(a)
    if not check_g_axioms(a, x).ax1:
        raise ConsistencyError("space-decomposable tensor must be regular")
    f1 = einstein_product(d.right, x)
    r1 = einstein_product(x, d.left)
    if einstein_product(f1, a) != d.right or einstein_product(a, r1) != d.left:
        raise ConsistencyError("factor inverses do not reproduce the companion factors")
    g = einstein_product(r1, f1)
    if not check_g_axioms(a, g).ax1:
        raise ConsistencyError("decomposition-derived candidate is not a generalized inverse")
    return g


def _maximal_rectangles(rows: tuple[int, ...], ncols: int) -> list[tuple[int, int]]:
    """All maximal all-ones rectangles of the matrix, as (row mask, col mask).

    Every maximal rectangle arises as (all rows whose support contains s, s)
    where s is an intersection of row supports, so scanning row subsets finds
    each one.
    """
    nrows = len(rows)
    full = (1 << ncols) - 1
    seen = set()
    for rowset in range(1, 1 << nrows):
        cols = full
        m = rowset
        while m:
            low = m & -m
            cols &= rows[low.bit_length() - 1]
            m ^= low
        if not cols:
            continue
        closed = 0
        for i in range(nrows):
            if rows[i] & cols == cols:
                closed |= 1 << i
        seen.add((closed, cols))
    return sorted(seen)


def _cover_search(cell_masks: list[int], universe: int, budget: int,
                  chosen: list[int]) -> Optional[list[int]]:
    """Depth-first search for <= budget rectangles covering the universe.

    Branches on the first uncovered cell; candidate order is fixed (largest
    fresh coverage first, mask as tie-break) so the certificate is
    deterministic.
    """
    if not universe:
        return list(chosen)
    if budget == 0:
        return None
    best_cover = max((m & universe).bit_count() for m in cell_masks)
    if (universe.bit_count() + best_cover - 1) // best_cover > budget:
        return None
    target = universe & -universe
    candidates = [m for m in cell_masks if m & target]
    candidates.sort(key=lambda m: (-(m & universe).bit_count(), m))
    for m in candidates:
        chosen.append(m)
        found = _cover_search(cell_masks, universe & ~m, budget - 1, chosen)
        if found is not None:
            return found
        chosen.pop()
    return None


def boolean_rank(a: BooleanTensor, cap: int = RANK_SEARCH_CAP) -> RankCertificate:
    """Exact Boolean rank with a witness factorization.

    The flattening factors through a middle of size r iff its 1-cells can be
    covered by r all-ones rectangles, so the minimum is found by iterative
    deepening over an exact rectangle-cover search.  Row/column permutations
    preserve rank, which licenses the reductions applied first: zero rows and
    columns are dropped and duplicate rows and columns are merged.
    """
    nrows, ncols = a.row_count, a.col_count
    if nrows > cap or ncols > cap:
        raise ResourceCapError(
            f"flattening is {nrows}x{ncols}; exact rank search is capped at {cap}x{cap}"
        )
    if all(w == 0 for w in a.rows):
        return RankCertificate(0, None)

    # merge duplicate / zero rows, then the same on columns
    row_rep: list[Optional[int]] = []
    uniq_rows: list[int] = []
    for w in a.rows:
        if w == 0:
            row_rep.append(None)
        else:
            if w not in uniq_rows:
                uniq_rows.append(w)
            row_rep.append(uniq_rows.index(w))
    col_words = [0] * ncols
    for i, w in enumerate(uniq_rows):
        for j in range(ncols):
            col_words[j] |= ((w >> j) & 1) << i
    col_rep: list[Optional[int]] = []
    uniq_cols: list[int] = []
    for w in col_words:
        if w == 0:
            col_rep.append(None)
        else:
            if w not in uniq_cols:
                uniq_cols.append(w)
            col_rep.append(uniq_cols.index(w))
    red_rows = tuple(
        sum(((uniq_cols[k] >> i) & 1) << k for k in range(len(uniq_cols)))
        for i in range(len(uniq_rows))
    )
    red_r, red_c = len(red_rows), len(uniq_cols)

    rects = _maximal_rectangles(red_rows, red_c)
    cell_masks = []
    for rowmask, colmask in rects:
        m = 0
        rm = rowmask
        while rm:
            low = rm & -rm
            m |= colmask << ((low.bit_length() - 1) * red_c)
            rm ^= low
        cell_masks.append(m)
    universe = sum(w << (i * red_c) for i, w in enumerate(red_rows))

    chosen: Optional[list[int]] = None
    rank = 0
    for r in range(1, min(red_r, red_c) + 1):
        chosen = _cover_search(cell_masks, universe, r, [])
        if chosen is not None:
            rank = r
            break
    if chosen is None:
        raise ConsistencyError("rectangle cover not found within the trivial bound")

    # expand the reduced cover back to witness factors on the original shape
    rect_rowmasks = []
    rect_colmasks = []
    for m in chosen:
        rowmask = 0
        colmask = (1 << red_c) - 1
        for i in range(red_r):
            part = (m >> (i * red_c)) & ((1 << red_c) - 1)
            if part:
                rowmask |= 1 << i
                colmask &= part
        rect_rowmasks.append(rowmask)
        rect_colmasks.append(colmask)
    left_rows = []
    for i in range(nrows):
        word = 0
        if row_rep[i] is not None:
            for k in range(rank):
                if (rect_rowmasks[k] >> row_rep[i]) & 1:
                    word |= 1 << k
        left_rows.append(word)
    right_rows = []
    for k in range(rank):
        word = 0
        for j in range(ncols):
            if col_rep[j] is not None and (rect_colmasks[k] >> col_rep[j]) & 1:
                word |= 1 << j
        right_rows.append(word)
    left = BooleanTensor(Shape(a.row_dims, (rank,)), tuple(left_rows))
    right = BooleanTensor(Shape((rank,), a.col_dims), tuple(right_rows))
    if einstein_product(left, right) != a:
        raise ConsistencyError("rank witness does not multiply back to the input")
    return RankCertificate(rank, (left, right))


def is_regular_by_rank(a: BooleanTensor) -> Optional[bool]:
    """True when a cheap sufficient condition (rank <= 1, which subsumes
    weight <= 1) certifies regularity; None when inconclusive.

    Rank <= 1 holds iff the tensor is zero or all its nonzero flattened rows
    coincide, so no capped search is involved.  For rank above 1 no general
    rule is known and the caller should fall back to
    :func:`einbool.ginverse.is_regular`.
    """
    nonzero = {w for w in a.rows if w}
    if len(nonzero) <= 1:
        return True
    return None
