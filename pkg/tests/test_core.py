"""Value type and primitive algebra."""

import dataclasses
from itertools import product

import pytest

from einbool import (
    ConsistencyError,
    Shape,
    ShapeError,
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
from einbool.oracle import enumerate_tensors

from worked_examples import complement_example_ab_c, complement_example_a, \
    complement_example_b, ginv_nonunique_a, rank_two_example, trace_example_a

S22 = Shape((2,), (2,))
S33 = Shape((3,), (3,))
S222 = Shape((2, 2), (2,))


def bt(bits, shape=S22):
    return make_tensor(shape, bits)


def multi_indices(dims):
    return product(*(range(1, d + 1) for d in dims))


def naive_product(a, b):
    """Per-entry reference for the contraction: OR over the contracted
    multi-indices of the AND of factors."""
    cells = []
    for i in multi_indices(a.row_dims):
        for j in multi_indices(b.col_dims):
            v = 0
            for k in multi_indices(a.col_dims):
                v |= a.entry(i, k) & b.entry(k, j)
            cells.append(v)
    return make_tensor(Shape(a.row_dims, b.col_dims), cells)


class TestShape:
    def test_counts(self):
        s = Shape((2, 3), (4,))
        assert (s.row_count, s.col_count, s.cells) == (6, 4, 24)

    def test_vector_like(self):
        s = Shape((2, 3))
        assert s.col_dims == () and s.col_count == 1

    def test_bad_dims(self):
        with pytest.raises(ShapeError):
            Shape((0,), (2,))
        with pytest.raises(ShapeError):
            Shape((), (2,))
        with pytest.raises(ShapeError):
            Shape((2,), (-1,))


class TestMakeTensor:
    def test_layout(self):
        t = bt("1010")
        assert t.entry((1,), (1,)) == 1
        assert t.entry((1,), (2,)) == 0
        assert t.entry((2,), (1,)) == 1
        assert t.bits == "1010"

    def test_grid_notation(self):
        assert bt("10|10") == bt("1010")

    def test_worked_fourth_order_example(self):
        a = ginv_nonunique_a()
        assert a.shape == Shape((2, 3), (2, 3))
        # every column slice is 100|100: rows (1,1) and (2,1) are all ones
        for k, l in multi_indices((2, 3)):
            for i, j in multi_indices((2, 3)):
                assert a.entry((i, j), (k, l)) == (1 if j == 1 else 0)

    def test_length_mismatch(self):
        with pytest.raises(ShapeError, match="4"):
            bt("101")

    def test_bad_bit_values(self):
        with pytest.raises(ShapeError):
            bt("10,0" )
        with pytest.raises(ShapeError):
            make_tensor(S22, [0, 1, 2, 0])

    def test_immutable(self):
        t = bt("1010")
        with pytest.raises(dataclasses.FrozenInstanceError):
            t.rows = (0, 0)

    def test_entry_validation(self):
        t = bt("1010")
        with pytest.raises(ShapeError):
            t.entry((3,), (1,))
        with pytest.raises(ShapeError):
            t.entry((1, 1), (1,))


class TestIdentity:
    def test_second_order(self):
        assert identity((2,)) == bt("10|01")

    def test_fourth_order(self):
        i = identity((2, 2))
        assert weight(i) == 4
        for r in multi_indices((2, 2)):
            for c in multi_indices((2, 2)):
                assert i.entry(r, c) == (1 if r == c else 0)

    def test_neutral(self):
        for a in enumerate_tensors(S22):
            assert einstein_product(identity((2,)), a) == a
            assert einstein_product(a, identity((2,))) == a
        for a in enumerate_tensors(S222):
            assert einstein_product(identity((2, 2)), a) == a
            assert einstein_product(a, identity((2,))) == a

    def test_empty_dims(self):
        with pytest.raises(ShapeError):
            identity(())


class TestPermutationTensor:
    def test_identity_map(self):
        assert permutation_tensor((1, 2), (2,)) == identity((2,))

    def test_swap(self):
        assert permutation_tensor((2, 1), (2,)) == bt("01|10")

    def test_all_permutations_orthogonal(self):
        import itertools
        i3 = identity((3,))
        for pi in itertools.permutations((1, 2, 3)):
            p = permutation_tensor(pi, (3,))
            assert einstein_product(p, transpose(p)) == i3
            assert einstein_product(transpose(p), p) == i3

    def test_not_bijective(self):
        with pytest.raises(ShapeError):
            permutation_tensor((1, 1), (2,))
        with pytest.raises(ShapeError):
            permutation_tensor((1, 2, 3), (2,))


class TestEinsteinProduct:
    def test_hand_example(self):
        assert einstein_product(bt("10|10"), bt("11|00")) == bt("11|11")

    def test_worked_complement_example(self):
        prod_c = complement(einstein_product(complement_example_a(), complement_example_b()))
        assert prod_c == complement_example_ab_c()

    def test_dimension_list_must_match(self):
        a = make_tensor(Shape((2,), (2, 3)), "1" * 12)
        b = make_tensor(Shape((3, 2), (2,)), "1" * 12)
        # products agree (6 = 6) but the mode lists differ
        with pytest.raises(ShapeError, match="2, 3"):
            einstein_product(a, b)

    def test_matches_entrywise_definition(self):
        shapes = [
            (S22, S22),
            (Shape((2,), (2, 2)), Shape((2, 2), (2,))),
            (Shape((3,), (2,)), Shape((2,), ())),
        ]
        for sa, sb in shapes:
            for na in range(0, 1 << sa.cells, 7):
                for nb in range(0, 1 << sb.cells, 5):
                    a = make_tensor(sa, format(na, f"0{sa.cells}b"))
                    b = make_tensor(sb, format(nb, f"0{sb.cells}b"))
                    assert einstein_product(a, b) == naive_product(a, b)

    def test_associative_exhaustive(self):
        ts = list(enumerate_tensors(S22))
        for a in ts:
            for b in ts:
                ab = einstein_product(a, b)
                for c in ts:
                    assert einstein_product(ab, c) == einstein_product(a, einstein_product(b, c))


class TestAdd:
    def test_examples(self):
        assert add(bt("10|00"), bt("01|00")) == bt("11|00")
        a = bt("11|01")
        assert add(a, a) == a
        assert add(a, zeros(S22)) == a

    def test_order_equivalence(self):
        for a in enumerate_tensors(S22):
            for b in enumerate_tensors(S22):
                assert leq(b, a) == (add(a, b) == a)

    def test_shape_mismatch(self):
        with pytest.raises(ShapeError):
            add(bt("1010"), ones(S33))


class TestTranspose:
    def test_examples(self):
        assert transpose(bt("10|10")) == bt("11|00")
        assert transpose(identity((2, 2))) == identity((2, 2))

    def test_involution_and_antihomomorphism(self):
        for a in enumerate_tensors(S22):
            assert transpose(transpose(a)) == a
            for b in enumerate_tensors(S22):
                assert transpose(einstein_product(a, b)) == \
                    einstein_product(transpose(b), transpose(a))

    def test_vector_like_has_no_transpose(self):
        # an empty row group is not representable, so this must refuse
        with pytest.raises(ShapeError):
            transpose(make_tensor(Shape((2,), ()), "10"))


class TestComplement:
    def test_examples(self):
        assert complement(bt("10|10")) == bt("01|01")
        assert complement(zeros(S22)) == ones(S22)

    def test_involution_and_transpose_commutation(self):
        a = bt("11|01")
        assert transpose(complement(a)) == complement(transpose(a))
        for t in enumerate_tensors(S222):
            assert complement(complement(t)) == t
            assert transpose(complement(t)) == complement(transpose(t))


class TestLeq:
    def test_examples(self):
        assert leq(bt("10|00"), bt("11|00"))
        assert not leq(bt("10|00"), bt("01|11"))

    def test_shape_mismatch(self):
        with pytest.raises(ShapeError):
            leq(bt("1010"), ones(S33))

    def test_sandwich_lemma(self):
        # a <= a * a^T * a on every tensor of three shapes
        for shape in (S22, S33, S222):
            for a in enumerate_tensors(shape):
                aat = einstein_product(a, transpose(a))
                assert leq(a, einstein_product(aat, a))


class TestTrace:
    def test_examples(self):
        assert trace(identity((2, 2))) == 4
        assert trace(zeros(S33)) == 0

    def test_worked_example(self):
        a = trace_example_a()
        ac = complement(a)
        assert trace(einstein_product(a, ac)) == 2
        assert trace(einstein_product(ac, a)) == 2

    def test_non_square(self):
        with pytest.raises(ShapeError):
            trace(make_tensor(Shape((2,), (3,)), "000000"))

    def test_switch_for_symmetric(self):
        for a in enumerate_tensors(S33):
            if a == transpose(a):
                ac = complement(a)
                assert trace(einstein_product(a, ac)) == trace(einstein_product(ac, a))


class TestWeight:
    def test_examples(self):
        assert weight(zeros(S22)) == 0
        assert weight(identity((3,))) == 3
        assert weight(rank_two_example()) == 3


class TestClosure:
    def test_examples(self):
        assert closure(identity((2,))) == identity((2,))
        assert closure(bt("01|00")) == bt("01|00")
        assert closure(bt("01|10")) == bt("11|11")

    def test_non_square(self):
        with pytest.raises(ShapeError):
            closure(make_tensor(Shape((2,), (3,)), "0" * 6))

    def _geq_identity_tensors(self):
        i3 = identity((3,))
        return [a for a in enumerate_tensors(S33) if leq(i3, a)]

    def test_reflexive_closure_laws(self):
        for a in self._geq_identity_tensors():
            powers = [a]
            for _ in range(8):
                powers.append(einstein_product(powers[-1], a))
            cl = closure(a)
            assert cl in powers  # a^n for some n <= 9
            assert einstein_product(cl, cl) == cl
            assert closure(cl) == cl

    def test_reflexive_closure_of_sum(self):
        geq = self._geq_identity_tensors()
        assert len(geq) == 64
        closures = {a: closure(a) for a in geq}
        for a in geq:
            for b in geq:
                lhs = closure(add(a, b))
                assert lhs == closure(einstein_product(closures[a], closures[b]))
                assert lhs == closure(einstein_product(closures[b], closures[a]))

    def test_zero_product_characterization(self):
        # a * a^C = O exactly for the zero tensor and its complement
        for shape in (S22, S33):
            for a in enumerate_tensors(shape):
                is_zero_product = einstein_product(a, complement(a)) == zeros(shape)
                assert is_zero_product == (a == zeros(shape) or a == ones(shape))


class TestBlockCompose:
    def test_diagonal_scalars(self):
        one = make_tensor(Shape((1,), (1,)), "1")
        assert block_compose("diagonal", one, one) == bt("10|01")

    def test_row_second_order(self):
        a = bt("10|10")
        b = make_tensor(Shape((2,), (1,)), "1|1")
        out = block_compose("row", a, b)
        assert out == make_tensor(Shape((2,), (3,)), "101|101")

    def test_column_matches_transposed_row(self):
        c = bt("11|01")
        d = bt("10|00")
        out = block_compose("column", c, d)
        assert transpose(out) == block_compose("row", transpose(c), transpose(d))

    def test_higher_order_cross_region_is_zero(self):
        a = ones(Shape((2,), (1, 1)))
        b = ones(Shape((2,), (1, 1)))
        out = block_compose("row", a, b)
        assert out.shape == Shape((2,), (2, 2))
        for i in (1, 2):
            assert out.entry((i,), (1, 1)) == 1  # first block
            assert out.entry((i,), (2, 2)) == 1  # shifted second block
            assert out.entry((i,), (1, 2)) == 0  # mixed ranges stay empty
            assert out.entry((i,), (2, 1)) == 0

    def test_kind_errors(self):
        with pytest.raises(ShapeError):
            block_compose("row", bt("1010"), ones(S33))
        with pytest.raises(ShapeError):
            block_compose("ring", bt("1010"), bt("1010"))


class TestVec:
    def test_block_order(self):
        v = vec(bt("10|01"))
        assert v.shape == Shape((2, 2), ())
        assert v.bits == "1001"

    def test_block_position_formula(self):
        t = make_tensor(S222, "10" "01" "11" "00")
        v = vec(t)
        # block t for row index (2,1) is 1 + (2-1)*2 = 3: vec cells 5,6 hold
        # the (2,1) slice of the source
        block = 3
        got = [v.entry((i1, i2, j)) for (i1, i2) in [(2, 1)] for j in (1, 2)]
        assert got == [t.entry((2, 1), (j,)) for j in (1, 2)]
        flat = v.bits
        assert flat[(block - 1) * 2: block * 2] == "11"

    def test_weight_preserved(self):
        for t in enumerate_tensors(S222):
            assert weight(vec(t)) == weight(t)


class TestClassify:
    def test_identity_all_flags(self):
        f = classify(identity((2,)))
        assert (f.symmetric, f.idempotent, f.orthogonal, f.diagonal, f.permutation) == \
            (True, True, True, True, True)

    def test_swap(self):
        f = classify(bt("01|10"))
        assert f.symmetric and f.orthogonal and f.permutation
        assert not f.idempotent and not f.diagonal

    def test_not_permutation(self):
        assert not classify(bt("11|01")).permutation

    def test_non_square_all_false(self):
        f = classify(make_tensor(Shape((2,), (3,)), "1" * 6))
        assert not any((f.symmetric, f.idempotent, f.orthogonal, f.diagonal, f.permutation))

    def test_flags_invariant_checked(self):
        from einbool import PropertyFlags
        with pytest.raises(ConsistencyError):
            PropertyFlags(False, False, False, False, True)


class TestReshape:
    def test_flattening(self):
        a = ginv_nonunique_a()
        flat = a.reshape((6,), (6,))
        assert flat.bits == a.bits
        assert flat.shape == Shape((6,), (6,))

    def test_group_products_must_match(self):
        with pytest.raises(ShapeError):
            bt("1010").reshape((4,), (1,))
