"""Boolean tensor algebra under the Einstein product.

Tensors over {0,1} with OR as addition and AND as multiplication: products,
order, complement, closure, residuation (maximum solutions of one-sided
equations), the full generalized-inverse taxonomy with existence predicates
and closed forms, space decomposition, Boolean rank, and weight.  Brute-force
oracles for desk-scale exhaustive validation live in :mod:`einbool.oracle`.

The two hot bit kernels run on a compiled extension when it is built and on
pure Python otherwise; see :func:`backend_name`.
"""

from ._backend import backend_name
from .core import (
    BooleanTensor,
    PropertyFlags,
    Shape,
    add,
    block_compose,
    classify,
    closure,
    complement,
    einstein_product,
    identity,
    leq,
    make_tensor,
    ones,
    permutation_tensor,
    trace,
    transpose,
    vec,
    weight,
    zeros,
)
from .decomposition import (
    RankCertificate,
    SpaceDecomposition,
    boolean_rank,
    g_inverse_from_decomposition,
    is_regular_by_rank,
    search_space_decomposition,
    verify_space_decomposition,
)
from .errors import (
    CertificateError,
    ConsistencyError,
    EinboolError,
    NotRegularError,
    ResourceCapError,
    ShapeError,
    TensorFormatError,
    WeightHypothesisError,
)
from .ginverse import (
    AxiomReport,
    WeightHypotheses,
    WeightPair,
    check_g_axioms,
    check_wmp_axioms,
    inverse,
    is_regular,
    max_g_inverse,
    max_reflexive_g_inverse,
    mp_inverse,
    one_four_inverse,
    one_three_inverse,
    wmp_inverse,
)
from .io import dump_tensor, dumps, load_tensor, loads
from .residuation import (
    SolveReport,
    construct_square_solution,
    left_cancellable,
    max_left_solution,
    max_right_solution,
    range_equal,
    range_subset,
    right_cancellable,
    solve_left,
    solve_right,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "backend_name",
    # core
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
    # residuation
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
    # generalized inverses
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
    # decomposition and rank
    "SpaceDecomposition",
    "RankCertificate",
    "verify_space_decomposition",
    "search_space_decomposition",
    "g_inverse_from_decomposition",
    "boolean_rank",
    "is_regular_by_rank",
    # serialization
    "dumps",
    "loads",
    "dump_tensor",
    "load_tensor",
    # errors
    "EinboolError",
    "ShapeError",
    "TensorFormatError",
    "NotRegularError",
    "WeightHypothesisError",
    "CertificateError",
    "ResourceCapError",
    "ConsistencyError",
]
