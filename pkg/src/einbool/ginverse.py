"""Generalized inverses under the Einstein product.

The four defining equations for a candidate inverse x of a are

    (1) a * x * a = a          (2) x * a * x = x
    (3) (a * x)^T = a * x      (4) (x * a)^T = x * a

x is a generalized inverse if it satisfies (1), reflexive if (1)+(2), a
{1,3}/{1,4} inverse if (1)+(3)/(1)+(4), and the Moore-Penrose inverse if all
four hold.  Over the Boolean semiring the whole taxonomy is decidable in
closed form; no search is ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    BooleanTensor,
    classify,
    complement,
    einstein_product,
    identity,
    leq,
    transpose,
)
from .errors import ConsistencyError, NotRegularError, ShapeError, WeightHypothesisError
from .residuation import range_equal

__all__ = [
    "AxiomReport",
    "WeightPair",
    "WeightHypotheses",
    "check_g_axioms",
    "max_g_inverse",
    "is_regular",
    "max_reflexive_g_inverse",
    "one_three_inverse",
    "one_four_inverse",
    "mp_inverse",
    "inverse",
    "check_wmp_axioms",
    "wmp_inverse",
]


@dataclass(frozen=True)
class AxiomReport:
    """Truth of the four defining equations (plain or weighted) for one
    candidate inverse."""

    ax1: bool
    ax2: bool
    ax3: bool
    ax4: bool

    @property
    def all_four(self) -> bool:
        return self.ax1 and self.ax2 and self.ax3 and self.ax4

    def as_dict(self) -> dict[str, bool]:
        return {"ax1": self.ax1, "ax2": self.ax2, "ax3": self.ax3, "ax4": self.ax4}


def _ct(a: BooleanTensor) -> BooleanTensor:
    # complement and transpose commute, so the order is immaterial
    return transpose(complement(a))


def _check_inverse_shape(a: BooleanTensor, x: BooleanTensor, name: str = "x") -> None:
    if x.row_dims != a.col_dims or x.col_dims != a.row_dims:
        raise ShapeError(
            f"{name} must have shape ({list(a.col_dims)},{list(a.row_dims)}), got {x.shape}"
        )


def check_g_axioms(a: BooleanTensor, x: BooleanTensor) -> AxiomReport:
    """Evaluate the four Penrose equations exactly."""
    _check_inverse_shape(a, x)
    ax = einstein_product(a, x)
    xa = einstein_product(x, a)
    return AxiomReport(
        ax1=einstein_product(ax, a) == a,
        ax2=einstein_product(xa, x) == x,
        ax3=transpose(ax) == ax,
        ax4=transpose(xa) == xa,
    )


def max_g_inverse(a: BooleanTensor) -> BooleanTensor:
    """(a * a^CT * a)^CT, the entrywise-largest candidate inverse.

    The formula tensor always exists and dominates every x with
    a * x * a <= a; when a is regular it is itself a generalized inverse,
    hence the maximum one.
    """
    return _ct(einstein_product(einstein_product(a, _ct(a)), a))


def is_regular(a: BooleanTensor) -> bool:
    """Does a * x * a = a have a solution?

    Testing the single candidate max_g_inverse(a) is sound and complete:
    every generalized inverse lies below it and the triple product is
    monotone, so regularity holds iff the maximum candidate works.
    """
    g = max_g_inverse(a)
    return einstein_product(einstein_product(a, g), a) == a


def max_reflexive_g_inverse(a: BooleanTensor) -> BooleanTensor:
    """g * a * g for g = max_g_inverse(a): the largest {1,2}-inverse.

    Raises :class:`NotRegularError` for singular a.
    """
    if not is_regular(a):
        raise NotRegularError(f"tensor of shape {a.shape} is singular")
    g = max_g_inverse(a)
    return einstein_product(einstein_product(g, a), g)


def _gram_witness(a: BooleanTensor, three: bool) -> Optional[BooleanTensor]:
    """Shared construction for the {1,3}/{1,4} witnesses.

    {1,4}: exists iff a regular and range(a) = range(a * a^T); witness
    a^T * (a * a^T)^(1).  {1,3}: mirrored through the transpose, witness
    (a^T * a)^(1) * a^T.  Both use the maximum inverse of the Gram product,
    which is regular whenever the range condition holds.
    """
    if not is_regular(a):
        return None
    at = transpose(a)
    if three:
        gram = einstein_product(at, a)
        if not range_equal(at, gram):
            return None
        witness = einstein_product(max_g_inverse(gram), at)
        rep = check_g_axioms(a, witness)
        if not (rep.ax1 and rep.ax3):
            raise ConsistencyError("constructed {1,3} witness fails its axioms")
    else:
        gram = einstein_product(a, at)
        if not range_equal(a, gram):
            return None
        witness = einstein_product(at, max_g_inverse(gram))
        rep = check_g_axioms(a, witness)
        if not (rep.ax1 and rep.ax4):
            raise ConsistencyError("constructed {1,4} witness fails its axioms")
    return witness


def one_three_inverse(a: BooleanTensor) -> Optional[BooleanTensor]:
    """A {1,3}-inverse, or None when none exists."""
    return _gram_witness(a, three=True)


def one_four_inverse(a: BooleanTensor) -> Optional[BooleanTensor]:
    """A {1,4}-inverse, or None when none exists."""
    return _gram_witness(a, three=False)


def mp_inverse(a: BooleanTensor) -> Optional[BooleanTensor]:
    """The Moore-Penrose inverse, or None.

    It exists iff a * a^T * a = a, and then it equals a^T (and is unique).
    """
    at = transpose(a)
    if einstein_product(einstein_product(a, at), a) != a:
        return None
    rep = check_g_axioms(a, at)
    if not rep.all_four:
        raise ConsistencyError("a^T fails an axiom although a * a^T * a = a")
    return at


def inverse(a: BooleanTensor) -> Optional[BooleanTensor]:
    """The two-sided inverse of a square tensor, or None.

    Present iff a * a^T = a^T * a = identity, i.e. iff a is a permutation
    tensor; the inverse is then a^T.
    """
    if not a.shape.is_square:
        raise ShapeError(f"inverse needs row_dims == col_dims, got {a.shape}")
    at = transpose(a)
    ident = identity(a.row_dims)
    if einstein_product(a, at) == ident and einstein_product(at, a) == ident:
        if not classify(a).permutation:
            raise ConsistencyError("orthogonal tensor not recognized as a permutation")
        return at
    return None


@dataclass(frozen=True)
class WeightHypotheses:
    """Where the weighted Moore-Penrose hypotheses stand for one (a, m, n)
    triple.  Computed, never assumed."""

    m_geq_identity: bool
    n_geq_identity: bool
    range_an_equals_a: bool
    range_atmt_equals_at: bool

    @property
    def all_hold(self) -> bool:
        return (self.m_geq_identity and self.n_geq_identity
                and self.range_an_equals_a and self.range_atmt_equals_at)

    def failures(self) -> tuple[str, ...]:
        out = []
        if not self.m_geq_identity:
            out.append("m >= identity")
        if not self.n_geq_identity:
            out.append("n >= identity")
        if not self.range_an_equals_a:
            out.append("range(a * n) = range(a)")
        if not self.range_atmt_equals_at:
            out.append("range(a^T * m^T) = range(a^T)")
        return tuple(out)


@dataclass(frozen=True)
class WeightPair:
    """Weight tensors for the weighted Moore-Penrose inverse: ``m`` square on
    the row group, ``n`` square on the column group."""

    m: BooleanTensor
    n: BooleanTensor

    def check_shapes(self, a: BooleanTensor) -> None:
        if self.m.row_dims != a.row_dims or not self.m.shape.is_square:
            raise ShapeError(f"row weight must be square on {list(a.row_dims)}, got {self.m.shape}")
        if self.n.row_dims != a.col_dims or not self.n.shape.is_square:
            raise ShapeError(f"column weight must be square on {list(a.col_dims)}, got {self.n.shape}")

    def hypotheses(self, a: BooleanTensor) -> WeightHypotheses:
        """Evaluate all four existence-theorem hypotheses against a."""
        self.check_shapes(a)
        at = transpose(a)
        return WeightHypotheses(
            m_geq_identity=leq(identity(a.row_dims), self.m),
            n_geq_identity=leq(identity(a.col_dims), self.n),
            range_an_equals_a=range_equal(a, einstein_product(a, self.n)),
            range_atmt_equals_at=range_equal(at, einstein_product(at, transpose(self.m))),
        )


def check_wmp_axioms(a: BooleanTensor, weights: WeightPair, z: BooleanTensor) -> AxiomReport:
    """Evaluate the four weighted equations: (1) and (2) as in the plain case,
    (3) with m inserted, (4) with n appended.

    Valid for any weights; the classic non-uniqueness demonstrations run this
    with hypotheses deliberately violated.
    """
    weights.check_shapes(a)
    _check_inverse_shape(a, z, "z")
    az = einstein_product(a, z)
    za = einstein_product(z, a)
    maz = einstein_product(weights.m, az)
    zan = einstein_product(za, weights.n)
    return AxiomReport(
        ax1=einstein_product(az, a) == a,
        ax2=einstein_product(za, z) == z,
        ax3=transpose(maz) == maz,
        ax4=transpose(zan) == zan,
    )


def wmp_inverse(a: BooleanTensor, weights: WeightPair) -> Optional[BooleanTensor]:
    """The weighted Moore-Penrose inverse n^T * a^T * m^T, or None.

    The existence theorem's hypotheses (m >= I, n >= I and the two range
    equalities) are checked first; a violation raises
    :class:`WeightHypothesisError` naming the failures, which is a different
    outcome from "hypotheses hold but no inverse exists" (None).  Under the
    hypotheses all four equivalent existence conditions are evaluated and
    must agree; disagreement would mean a bug and raises
    :class:`ConsistencyError`.
    """
    hyp = weights.hypotheses(a)
    if not hyp.all_hold:
        raise WeightHypothesisError(hyp.failures())
    at = transpose(a)
    mt = transpose(weights.m)
    nt = transpose(weights.n)

    def sandwich(nn: BooleanTensor, mm: BooleanTensor) -> bool:
        prod = einstein_product(
            einstein_product(einstein_product(einstein_product(a, nn), at), mm), a
        )
        return prod == a

    conditions = (
        sandwich(weights.n, weights.m),
        sandwich(nt, weights.m),
        sandwich(weights.n, mt),
        sandwich(nt, mt),
    )
    if len(set(conditions)) != 1:
        raise ConsistencyError(f"weighted existence conditions disagree: {conditions}")
    if not conditions[0]:
        return None
    z = einstein_product(einstein_product(nt, at), mt)
    if not check_wmp_axioms(a, weights, z).all_four:
        raise ConsistencyError("closed-form weighted inverse fails its axioms")
    return z
