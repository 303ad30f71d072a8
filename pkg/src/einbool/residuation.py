"""Residuation: maximum solutions of one-sided product inequalities and exact
equations, range-space subset tests, and cancellation predicates.

The Boolean semiring has no subtraction, but the order is residuated: for
fixed a and b each inequality x * a <= b and a * x <= b has a largest
solution, given in closed form by complement-transpose formulas.  Exact
equations are then decidable by plugging the maximum back in.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import BooleanTensor, complement, einstein_product, transpose
from .errors import ShapeError

__all__ = [
    "SolveReport",
    "max_left_solution",
    "max_right_solution",
    "solve_left",
    "solve_right",
    "construct_square_solution",
    "range_subset",
    "range_equal",
    "left_cancellable",
    "right_cancellable",
]


@dataclass(frozen=True)
class SolveReport:
    """Outcome of an exact one-sided equation.

    ``max_solution`` is always present: the largest x satisfying the <=
    relaxation.  ``exact_witness`` is that same tensor exactly when the
    equation is solvable (the maximum relaxed solution is then the maximum
    exact solution).
    """

    solvable: bool
    max_solution: BooleanTensor
    exact_witness: Optional[BooleanTensor]


def max_left_solution(a: BooleanTensor, b: BooleanTensor) -> BooleanTensor:
    """Largest x with x * a <= b, namely (b^C * a^T)^C.

    Maximality is universal: x * a <= b holds iff x <= the returned tensor.
    """
    if a.col_dims != b.col_dims:
        raise ShapeError(f"x * a and b must share column group: a {a.shape}, b {b.shape}")
    return complement(einstein_product(complement(b), transpose(a)))


def max_right_solution(a: BooleanTensor, b: BooleanTensor) -> BooleanTensor:
    """Largest x with a * x <= b, namely (a^T * b^C)^C."""
    if a.row_dims != b.row_dims:
        raise ShapeError(f"a * x and b must share row group: a {a.shape}, b {b.shape}")
    return complement(einstein_product(transpose(a), complement(b)))


def solve_left(a: BooleanTensor, b: BooleanTensor) -> SolveReport:
    """Solve x * a = b exactly; when solvable the report carries the maximum
    exact solution."""
    best = max_left_solution(a, b)
    ok = einstein_product(best, a) == b
    return SolveReport(ok, best, best if ok else None)


def solve_right(a: BooleanTensor, b: BooleanTensor) -> SolveReport:
    """Solve a * x = b exactly; when solvable the report carries the maximum
    exact solution."""
    best = max_right_solution(a, b)
    ok = einstein_product(a, best) == b
    return SolveReport(ok, best, best if ok else None)


def construct_square_solution(a: BooleanTensor, b: BooleanTensor) -> BooleanTensor:
    """Candidate solution c of a * x = b for square same-shape a, b:
    c[i, j] = 1 iff a[i, i] = 0 or b[i, j] = 1.

    This closed form is kept verbatim and quarantined: its solvability claim
    disagrees with :func:`solve_right` on some inputs (the diagonal condition
    ignores off-diagonal rows of a), so callers must cross-check a * c == b
    against the residuation report rather than trust it.
    """
    if not a.shape.is_square or a.shape != b.shape:
        raise ShapeError(f"need square tensors of one shape, got {a.shape} and {b.shape}")
    rows = []
    full = (1 << a.col_count) - 1
    for i, (arow, brow) in enumerate(zip(a.rows, b.rows)):
        rows.append(full if not (arow >> i) & 1 else brow)
    return BooleanTensor(a.shape, tuple(rows))


def range_subset(b: BooleanTensor, a: BooleanTensor) -> bool:
    """Is the range of b contained in the range of a?

    Range containment is equivalent to b = a * u for some u, which residuation
    decides constructively; no enumeration of the (exponentially large) range
    is needed.
    """
    if a.row_dims != b.row_dims:
        raise ShapeError(f"range comparison needs a shared row group: {b.shape} vs {a.shape}")
    return solve_right(a, b).solvable


def range_equal(a: BooleanTensor, b: BooleanTensor) -> bool:
    """Mutual range containment."""
    return range_subset(a, b) and range_subset(b, a)


def left_cancellable(a: BooleanTensor, b: BooleanTensor) -> bool:
    """May a be cancelled on the left of b?

    True iff range(b^T) = range(b^T * a^T); then a * b * c = a * b * d forces
    b * c = b * d for every conformable c, d.
    """
    if a.col_dims != b.row_dims:
        raise ShapeError(f"cannot form a * b for {a.shape} and {b.shape}")
    bt = transpose(b)
    return range_equal(bt, einstein_product(bt, transpose(a)))


def right_cancellable(a: BooleanTensor, b: BooleanTensor) -> bool:
    """May b be cancelled on the right of a?

    True iff range(a) = range(a * b); then c * a * b = d * a * b forces
    c * a = d * a for every conformable c, d.
    """
    if a.col_dims != b.row_dims:
        raise ShapeError(f"cannot form a * b for {a.shape} and {b.shape}")
    return range_equal(a, einstein_product(a, b))
