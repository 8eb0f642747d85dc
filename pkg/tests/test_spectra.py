import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from negabench.core import (
    AnfPolynomial,
    BitVector,
    BooleanFunction,
    NotBentError,
    VectorSet,
    truth_table_from_anf,
)
from negabench.spectra import (
    GaussianInteger,
    InvalidPermutationError,
    classify,
    dual,
    fragmentary_nega,
    fragmentary_nega_spectrum,
    fragmentary_walsh,
    fragmentary_walsh_spectrum,
    i_power,
    is_bent,
    is_negabent,
    is_weight_sum_invariant,
    mm_dual,
    mm_function,
    nega_transform,
    walsh_transform,
)


def _random_functions(n, count, seed):
    rng = np.random.default_rng(seed)
    nbytes = max(1, (1 << n) // 8)
    return [BooleanFunction(n, int.from_bytes(rng.bytes(nbytes), "little") & ((1 << (1 << n)) - 1))
            for _ in range(count)]


class TestGaussianInteger:
    def test_arithmetic(self):
        a = GaussianInteger(1, 2)
        b = GaussianInteger(3, -1)
        assert a + b == GaussianInteger(4, 1)
        assert a - b == GaussianInteger(-2, 3)
        assert a * b == GaussianInteger(5, 5)
        assert -a == GaussianInteger(-1, -2)
        assert a.conj() == GaussianInteger(1, -2)
        assert a.scale(3) == GaussianInteger(3, 6)
        assert a.norm_sq() == 5
        assert str(GaussianInteger(2, -3)) == "2-3i"

    def test_i_power_cycle(self):
        assert i_power(0) == GaussianInteger(1, 0)
        assert i_power(1) == GaussianInteger(0, 1)
        assert i_power(2) == GaussianInteger(-1, 0)
        assert i_power(3) == GaussianInteger(0, -1)
        assert i_power(-1) == i_power(3)
        assert i_power(-6) == i_power(2)


class TestWalsh:
    def test_zero_function(self):
        wf = walsh_transform(BooleanFunction.zero(2))
        assert list(wf.values) == [4, 0, 0, 0]
        assert wf.parseval_holds()

    def test_quadratic_bent(self):
        f = truth_table_from_anf(AnfPolynomial.from_monomials(2, [0b11]))
        wf = walsh_transform(f)
        assert list(wf.values) == [2, 2, 2, -2]
        assert wf.flat_counterexample() is None
        assert dual(f) == f

    def test_odd_n_never_flat(self):
        f = BooleanFunction.zero(3)
        assert walsh_transform(f).flat_counterexample() is not None

    @settings(max_examples=40, deadline=None)
    @given(n=st.integers(1, 8), data=st.data())
    def test_parseval_always(self, n, data):
        bits = data.draw(st.integers(0, (1 << (1 << n)) - 1))
        f = BooleanFunction(n, bits)
        assert walsh_transform(f).parseval_holds()
        assert nega_transform(f).parseval_holds()


class TestNega:
    def test_zero_function_small(self):
        nf = nega_transform(BooleanFunction.zero(1))
        assert nf.value(0) == GaussianInteger(1, 1)
        assert nf.value(1) == GaussianInteger(1, -1)
        nf2 = nega_transform(BooleanFunction.zero(2))
        assert nf2.value(0) == GaussianInteger(0, 2)

    def test_norm_sq_value(self):
        nf = nega_transform(BooleanFunction.zero(2))
        assert nf.norm_sq_value(0) == 4

    @settings(max_examples=30, deadline=None)
    @given(n=st.integers(1, 6), data=st.data())
    def test_matches_literal_sum(self, n, data):
        bits = data.draw(st.integers(0, (1 << (1 << n)) - 1))
        f = BooleanFunction(n, bits)
        nf = nega_transform(f)
        full = VectorSet.full(n)
        u = data.draw(st.integers(0, (1 << n) - 1))
        assert fragmentary_nega(f, full, u) == nf.value(u)


class TestClassify:
    def test_bent_negabent_flags(self):
        f = truth_table_from_anf(AnfPolynomial.from_monomials(2, [0b11]))
        cls = classify(f)
        assert cls.is_bent and not cls.is_negabent
        assert is_bent(f) and not is_negabent(f)

    def test_odd_n_note(self):
        cls = classify(BooleanFunction.zero(3))
        assert not cls.is_bent
        assert "odd" in cls.note

    def test_dual_requires_bent(self):
        with pytest.raises(NotBentError):
            dual(BooleanFunction.zero(2))

    def test_dual_involution_on_bent(self):
        f = truth_table_from_anf(AnfPolynomial.from_monomials(4, [0b0011, 0b1100, 0b0001]))
        assert is_bent(f)
        assert dual(dual(f)) == f


class TestFragmentary:
    def test_fragment_plus_complement_is_full(self):
        f = truth_table_from_anf(AnfPolynomial.from_monomials(4, [0b0011, 0b1100]))
        t = VectorSet.from_indices(4, [0, 1, 5, 9, 12])
        tc = t.complement()
        wf = walsh_transform(f)
        nf = nega_transform(f)
        wt, wtc = fragmentary_walsh_spectrum(f, t), fragmentary_walsh_spectrum(f, tc)
        nt, ntc = fragmentary_nega_spectrum(f, t), fragmentary_nega_spectrum(f, tc)
        for u in range(16):
            assert wt.value(u) + wtc.value(u) == wf.value(u)
            assert nt.value(u) + ntc.value(u) == nf.value(u)

    def test_masked_equals_literal(self):
        for f in _random_functions(5, 4, seed=11):
            t = VectorSet.from_indices(5, [0, 3, 7, 17, 30, 31])
            wt = fragmentary_walsh_spectrum(f, t)
            nt = fragmentary_nega_spectrum(f, t)
            for u in range(32):
                assert wt.value(u) == fragmentary_walsh(f, t, u)
                assert nt.value(u) == fragmentary_nega(f, t, u)

    def test_empty_fragment_is_zero(self):
        f = BooleanFunction.zero(3)
        t = VectorSet.empty(3)
        assert all(fragmentary_walsh_spectrum(f, t).value(u) == 0 for u in range(8))


class TestMaioranaMcFarland:
    def test_inner_product_shape(self):
        pi = tuple(range(4))
        phi = BooleanFunction.zero(2)
        f = mm_function(pi, phi)
        assert f.n == 4
        # f(x, y) = x.pi(y) + phi(y), x in the low bits
        for idx in range(16):
            x, y = idx & 3, idx >> 2
            want = bin(x & pi[y]).count("1") & 1
            assert f.value(idx) == want
        assert is_bent(f)

    def test_dual_formula(self):
        pi = (0, 2, 1, 3)
        phi = BooleanFunction(2, 0b0110)
        f = mm_function(pi, phi)
        assert dual(f) == mm_dual(pi, phi)

    def test_rejects_non_permutation(self):
        with pytest.raises(InvalidPermutationError):
            mm_function((0, 0, 1, 3), BooleanFunction.zero(2))

    def test_weight_sum_invariance(self):
        assert is_weight_sum_invariant(tuple(range(8)))
        # pi(y) = (y0 + y1, y1) shifts weight between classes
        pi = tuple((y ^ ((y >> 1) & 1)) for y in range(4))
        assert sorted(pi) == [0, 1, 2, 3]
        assert not is_weight_sum_invariant(pi)
