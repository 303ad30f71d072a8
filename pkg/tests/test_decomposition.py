"""Space decomposition, Boolean rank, regularity consequences."""

import pytest

from einbool import (
    CertificateError,
    ResourceCapError,
    Shape,
    ShapeError,
    SpaceDecomposition,
    boolean_rank,
    check_g_axioms,
    einstein_product,
    g_inverse_from_decomposition,
    identity,
    is_regular,
    is_regular_by_rank,
    make_tensor,
    max_g_inverse,
    ones,
    search_space_decomposition,
    verify_space_decomposition,
    weight,
    zeros,
)
from einbool.oracle import brute_boolean_rank, brute_g_inverses, enumerate_tensors

from worked_examples import rank_two_example

S22 = Shape((2,), (2,))
S33 = Shape((3,), (3,))


def bt(bits, shape=S22):
    return make_tensor(shape, bits)


def all_decompositions(a, middle):
    """Every verified (left, right) pair through the given middle group."""
    out = []
    for f in enumerate_tensors(Shape(a.row_dims, middle)):
        for r in enumerate_tensors(Shape(middle, a.col_dims)):
            if verify_space_decomposition(a, f, r):
                out.append((f, r))
    return out


class TestVerify:
    def test_identity_triple(self):
        i = identity((2,))
        assert verify_space_decomposition(i, i, i)

    def test_column_split(self):
        a = bt("10|10")
        f = make_tensor(Shape((2,), (1,)), "1|1")
        r = make_tensor(Shape((1,), (2,)), "10")
        assert verify_space_decomposition(a, f, r)

    def test_identity_cofactor_breaks_row_range(self):
        a = bt("10|10")
        assert not verify_space_decomposition(a, a, identity((2,)))

    def test_shape_mismatch(self):
        with pytest.raises(ShapeError):
            verify_space_decomposition(bt("10|10"), ones(S33), ones(S33))

    def test_certified_constructor(self):
        f = make_tensor(Shape((2,), (1,)), "1|1")
        r = make_tensor(Shape((1,), (2,)), "10")
        d = SpaceDecomposition(f, r)
        assert d.middle_dims == (1,)
        assert d.composed == bt("10|10")
        with pytest.raises(CertificateError):
            SpaceDecomposition(bt("10|10"), identity((2,)))


class TestSearch:
    def test_column_split_found(self):
        d = search_space_decomposition(bt("10|10"), (1,))
        assert d is not None
        assert d.left == make_tensor(Shape((2,), (1,)), "1|1")
        assert d.right == make_tensor(Shape((1,), (2,)), "10")

    def test_identity_needs_full_middle(self):
        assert search_space_decomposition(identity((2,)), (1,)) is None

    def test_identity_full_middle_deterministic(self):
        # first valid left factor in bit order is the swap permutation
        d = search_space_decomposition(identity((2,)), (2,))
        assert d is not None
        assert d.left == bt("01|10") and d.right == bt("01|10")
        assert verify_space_decomposition(identity((2,)), d.left, d.right)

    def test_middle_cap(self):
        with pytest.raises(ResourceCapError):
            search_space_decomposition(identity((2,)), (5,))

    def test_agrees_with_exhaustive_listing(self):
        for a in enumerate_tensors(S22):
            found = search_space_decomposition(a, (1,))
            listed = all_decompositions(a, (1,))
            assert (found is not None) == (listed != [])
            if found is not None:
                assert (found.left, found.right) == listed[0]


class TestGInverseFromDecomposition:
    def test_identity(self):
        i = identity((2,))
        assert g_inverse_from_decomposition(i, SpaceDecomposition(i, i)) == i

    def test_column_split(self):
        a = bt("10|10")
        d = search_space_decomposition(a, (1,))
        g = g_inverse_from_decomposition(a, d)
        assert check_g_axioms(a, g).ax1

    def test_wrong_certificate(self):
        i = identity((2,))
        with pytest.raises(CertificateError):
            g_inverse_from_decomposition(bt("10|10"), SpaceDecomposition(i, i))

    def test_theorem_consequences_exhaustive(self):
        """Over every decomposition found through middles [1] and [2] and
        every generalized inverse x of the decomposed tensor: the induced
        factor inverses right*x and x*left satisfy the companion identities,
        are reflexive inverses of their factors, and their product inverts the
        tensor; reflexive factor inverses always produce a reflexive
        inverse."""
        hits = 0
        for a in enumerate_tensors(S22):
            for middle in ((1,), (2,)):
                for f, r in all_decompositions(a, middle):
                    hits += 1
                    assert is_regular(a) and is_regular(f) and is_regular(r)
                    for x in brute_g_inverses(a):
                        f1 = einstein_product(r, x)
                        r1 = einstein_product(x, f)
                        assert einstein_product(f1, a) == r
                        assert einstein_product(a, r1) == f
                        assert einstein_product(f1, f) == einstein_product(r, r1)
                        repf = check_g_axioms(f, f1)
                        repr_ = check_g_axioms(r, r1)
                        assert repf.ax1 and repf.ax2
                        assert repr_.ax1 and repr_.ax2
                        g = einstein_product(r1, f1)
                        rep = check_g_axioms(a, g)
                        assert rep.ax1 and rep.ax2
                        # every reflexive inverse factors through the
                        # decomposition as (x * left) * (right * x)
                        if check_g_axioms(a, x).ax2:
                            assert x == g
        assert hits > 0

    def test_factor_maximum_inverses_miss_companion_identity(self):
        """The companion identities pin down the factor witnesses: the
        factors' own maximum inverses need not satisfy them."""
        a = f = r = bt("00|01")
        assert verify_space_decomposition(a, f, r)
        assert einstein_product(max_g_inverse(f), a) != r
        # the derivation through an inverse of a still works
        g = g_inverse_from_decomposition(a, SpaceDecomposition(f, r))
        assert check_g_axioms(a, g).ax1

    def test_some_inverse_escapes_the_factored_form(self):
        """A non-reflexive generalized inverse is never a product of factor
        inverses; exhibit at least one such instance."""
        found = False
        for a in enumerate_tensors(S22):
            d = search_space_decomposition(a, (1,))
            if d is None:
                continue
            factored = {
                einstein_product(gr, gf).bits
                for gf in brute_g_inverses(d.left)
                for gr in brute_g_inverses(d.right)
            }
            for x in brute_g_inverses(a):
                xax = einstein_product(einstein_product(x, a), x)
                if xax != x and x.bits not in factored:
                    found = True
        assert found


class TestBooleanRank:
    def test_zero(self):
        cert = boolean_rank(zeros(S22))
        assert cert.rank == 0 and cert.witness is None

    def test_worked_rank_two_example(self):
        a = rank_two_example()
        cert = boolean_rank(a)
        assert cert.rank == 2
        left, right = cert.witness
        assert left.shape == Shape((2, 2), (2,))
        assert right.shape == Shape((2,), (2, 2))
        assert einstein_product(left, right) == a

    def test_single_cell(self):
        assert boolean_rank(bt("10|00")).rank == 1

    def test_matches_brute_force(self):
        for shape in (S22, S33):
            for a in enumerate_tensors(shape):
                cert = boolean_rank(a)
                assert cert.rank == brute_boolean_rank(a)
                assert cert.rank <= min(a.row_count, a.col_count)
                assert (cert.rank == 0) == (a == zeros(shape))
                if cert.witness is not None:
                    left, right = cert.witness
                    assert left.col_dims == (cert.rank,)
                    assert einstein_product(left, right) == a

    def test_deterministic(self):
        a = make_tensor(S33, "110|011|101")
        first = boolean_rank(a)
        again = boolean_rank(a)
        assert first == again

    def test_cap(self):
        with pytest.raises(ResourceCapError):
            boolean_rank(zeros(Shape((9,), (2,))))

    def test_identity_rank_is_full(self):
        assert boolean_rank(identity((3,))).rank == 3
        assert boolean_rank(identity((2, 2))).rank == 4


class TestRankRegularity:
    def test_low_rank_implies_regular(self):
        for shape in (S22, S33):
            for a in enumerate_tensors(shape):
                if boolean_rank(a).rank <= 1:
                    assert is_regular(a)

    def test_low_weight_implies_low_rank(self):
        for shape in (S22, S33):
            for a in enumerate_tensors(shape):
                if weight(a) <= 1:
                    assert boolean_rank(a).rank <= 1

    def test_shortcut_predicate(self):
        assert is_regular_by_rank(zeros(S22)) is True
        assert is_regular_by_rank(bt("00|10")) is True
        assert is_regular_by_rank(rank_two_example()) is None

    def test_shortcut_agrees_with_rank(self):
        for a in enumerate_tensors(S33):
            short = is_regular_by_rank(a)
            r = boolean_rank(a).rank
            assert (short is True) == (r <= 1)
            if short is not None:
                assert short == is_regular(a)
