import pytest
from hypothesis import given, settings, strategies as st

from negabench.core import (
    AnfPolynomial,
    BitVector,
    BooleanFunction,
    CapacityError,
    VectorSet,
    algebraic_degree,
    anf_from_truth_table,
    characteristic_function,
    cyclic_shift,
    cyclic_shift_action,
    is_k_rotation_symmetric,
    max_n,
    rotation_symmetry_order,
    set_max_n,
    truth_table_from_anf,
    xor_functions,
)


class TestBitVector:
    def test_string_round_trip(self):
        v = BitVector.from_string("0110")
        assert v.bits == 0b0110 and v.n == 4
        assert v.to_string() == "0110"
        assert str(v) == "0110"

    def test_from_coords(self):
        assert BitVector.from_coords([1, 0, 0, 1]).bits == 0b1001

    def test_bad_strings(self):
        with pytest.raises(ValueError):
            BitVector.from_string("01x0")
        with pytest.raises(ValueError):
            BitVector.from_string("")

    def test_xor_dot_weight(self):
        a = BitVector(4, 0b0011)
        b = BitVector(4, 0b0110)
        assert (a + b).bits == 0b0101
        assert a.dot(b) == 1
        assert a.weight() == 2

    def test_unit(self):
        assert BitVector.unit(3, 0).bits == 0  # eps taken mod 2
        assert BitVector.unit(3, 1).bits == 1

    def test_concat_sub(self):
        v = BitVector(2, 0b01).concat(BitVector(2, 0b11))
        assert v.n == 4 and v.bits == 0b1101
        assert v.sub(2, 2).bits == 0b11

    def test_covers(self):
        assert BitVector(3, 0b111).covers(BitVector(3, 0b101))
        assert not BitVector(3, 0b001).covers(BitVector(3, 0b011))


class TestVectorSet:
    def test_membership_and_size(self):
        s = VectorSet.from_indices(3, [1, 5, 5])
        assert len(s) == 2
        assert BitVector(3, 5) in s
        assert BitVector(3, 2) not in s

    def test_set_algebra(self):
        a = VectorSet.from_indices(2, [0, 1])
        b = VectorSet.from_indices(2, [1, 2])
        assert sorted((a | b).indices()) == [0, 1, 2]
        assert sorted(a.intersection(b).indices()) == [1]
        assert sorted(a.complement().indices()) == [2, 3]

    def test_full_and_empty(self):
        assert len(VectorSet.full(3)) == 8
        assert len(VectorSet.empty(3)) == 0


class TestBooleanFunction:
    def test_values_and_weight(self):
        f = BooleanFunction(2, 0b0100)  # support {2}
        assert f.values() == [0, 0, 1, 0]
        assert f.weight() == 1
        assert sorted(f.support().indices()) == [2]

    def test_hex_round_trip_little_endian_nibbles(self):
        f = BooleanFunction(4, 0x5A)
        assert f.to_hex() == "a500"  # low nibble printed first, fixed width
        assert BooleanFunction.from_hex(4, "a500") == f
        assert BooleanFunction(2, 0b0100).to_hex() == "4"

    def test_from_hex_rejects_wrong_length(self):
        with pytest.raises(ValueError):
            BooleanFunction.from_hex(4, "a5f")

    def test_xor(self):
        f = BooleanFunction(2, 0b0110)
        g = BooleanFunction(2, 0b0011)
        assert (f ^ g).bits == 0b0101
        assert xor_functions(f, g) == f ^ g

    def test_characteristic_function(self):
        s = VectorSet.from_indices(2, [0, 3])
        chi = characteristic_function(s)
        assert chi.values() == [1, 0, 0, 1]


class TestAnf:
    def test_known_polynomial(self):
        # f = x0*x1 + x1 has truth table [0, 0, 1, 0]
        anf = AnfPolynomial.from_monomials(2, [0b11, 0b10])
        f = truth_table_from_anf(anf)
        assert f.values() == [0, 0, 1, 0]
        assert anf_from_truth_table(f) == anf

    def test_mobius_round_trip_exhaustive_small(self):
        for n in (1, 2, 3):
            for bits in range(1 << (1 << n)):
                f = BooleanFunction(n, bits)
                assert truth_table_from_anf(anf_from_truth_table(f)) == f

    @settings(max_examples=60, deadline=None)
    @given(n=st.integers(4, 6), data=st.data())
    def test_mobius_round_trip_random(self, n, data):
        bits = data.draw(st.integers(0, (1 << (1 << n)) - 1))
        anf = AnfPolynomial(n, bits)
        assert anf_from_truth_table(truth_table_from_anf(anf)) == anf

    def test_text_round_trip(self):
        anf = AnfPolynomial.from_monomials(3, [0, 0b101, 0b010])
        text = anf.to_text()
        assert text == "1+x1+x0*x2"
        assert AnfPolynomial.from_text(3, text) == anf
        assert AnfPolynomial.zero(3).to_text() == "0"
        assert AnfPolynomial.from_text(3, "0") == AnfPolynomial.zero(3)

    def test_from_monomials_xor_accumulates(self):
        assert AnfPolynomial.from_monomials(2, [3, 3]) == AnfPolynomial.zero(2)

    def test_degree(self):
        assert AnfPolynomial.zero(3).degree() == 0
        assert AnfPolynomial.from_monomials(3, [0]).degree() == 0
        assert AnfPolynomial.from_monomials(3, [0b1, 0b110]).degree() == 2
        assert algebraic_degree(BooleanFunction.zero(3)) == 0
        assert algebraic_degree(BooleanFunction.constant(3, 1)) == 0

    def test_evaluate_matches_table(self):
        anf = AnfPolynomial.from_monomials(3, [0b011, 0b100, 0])
        f = truth_table_from_anf(anf)
        assert all(anf.evaluate(x) == f.value(x) for x in range(8))


class TestRotation:
    def test_cyclic_shift_moves_bit_down(self):
        assert cyclic_shift(BitVector(4, 0b0001), 1).bits == 0b1000
        assert cyclic_shift(BitVector(4, 0b0001), 2).bits == 0b0100

    def test_shift_action_order(self):
        # f(x) = x0 on 4 variables: orbit under shifting has size 4
        f = truth_table_from_anf(AnfPolynomial.from_monomials(4, [0b0001]))
        assert rotation_symmetry_order(f) == 4
        shifted = cyclic_shift_action(f, 1)
        assert shifted != f
        assert cyclic_shift_action(f, 4) == f

    def test_constants_have_order_one(self):
        assert rotation_symmetry_order(BooleanFunction.zero(4)) == 1
        assert rotation_symmetry_order(BooleanFunction.constant(4, 1)) == 1

    def test_is_k_rotation_symmetric(self):
        f = truth_table_from_anf(AnfPolynomial.from_monomials(4, [0b0011, 0b1100]))
        assert is_k_rotation_symmetric(f, 2)
        assert not is_k_rotation_symmetric(f, 1)
        assert rotation_symmetry_order(f) == 2


class TestCapacity:
    def test_limit_enforced(self):
        old = max_n()
        try:
            set_max_n(8)
            with pytest.raises(CapacityError):
                BooleanFunction.zero(10)
            BooleanFunction.zero(8)
        finally:
            set_max_n(old)

    def test_dimension_validation(self):
        with pytest.raises(ValueError):
            BitVector(2, 7)
        with pytest.raises(ValueError):
            BooleanFunction(2, 1 << 16)
