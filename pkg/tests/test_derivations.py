import pytest
from hypothesis import given, settings, strategies as st

from schubert.derivations import (
    DPolynomial,
    apply_operator,
    inverse_components,
    iterated_d1,
    leibniz_d,
    leibniz_raw_terms,
    pieri_d,
    render_dpolynomial,
)
from schubert.exterior_core import (
    InvalidInputError,
    KVector,
    Partition,
    fundamental,
    normalize,
    wedge,
)

symbols = st.sets(st.integers(1, 12), min_size=1, max_size=4).map(
    lambda s: tuple(sorted(s))
)


class TestDPolynomial:
    def test_identity_and_generator(self):
        assert DPolynomial.generator(0) == DPolynomial.identity()
        assert DPolynomial.generator(-1).is_zero()
        assert DPolynomial.generator(3).terms == {Partition((3,)): 1}

    def test_ring_axioms(self):
        a = DPolynomial.generator(1)
        b = DPolynomial.generator(2)
        assert a * b == b * a
        assert (a + b) * a == a * a + b * a
        assert a - a == DPolynomial.zero()
        assert 3 * a == a * 3

    def test_grading(self):
        p = DPolynomial.generator(1) * DPolynomial.generator(2)
        assert p.degree() == 3
        assert p.is_homogeneous()
        assert not (p + DPolynomial.generator(1)).is_homogeneous()

    def test_render(self):
        p = DPolynomial.generator(1) * DPolynomial.generator(2) - DPolynomial.generator(3)
        assert render_dpolynomial(p) == "D1*D2 - D3"
        assert render_dpolynomial(DPolynomial.identity()) == "1"
        assert render_dpolynomial(DPolynomial.zero()) == "0"
        sq = DPolynomial.generator(1) * DPolynomial.generator(1)
        assert render_dpolynomial(sq) == "D1^2"


class TestGoldenDerivatives:
    def test_first_derivative(self):
        v = KVector.basis((2, 4))
        expected = KVector.basis((3, 4)) + KVector.basis((2, 5))
        assert leibniz_d(1, v) == expected
        assert pieri_d(1, v) == expected

    def test_second_derivative_with_cancellation(self):
        v = KVector.basis((2, 3, 5))
        expected = KVector.basis((2, 4, 6)) + KVector.basis((2, 3, 7))
        assert leibniz_d(2, v) == expected
        assert pieri_d(2, v) == expected

    def test_h_zero_is_identity(self):
        v = KVector.basis((2, 4)) + KVector.basis((1, 7), 3)
        assert leibniz_d(0, v) == v
        assert pieri_d(0, v) == v

    def test_consecutive_block(self):
        assert pieri_d(3, KVector.basis((5, 6))) == KVector.basis((5, 9))

    def test_small_case(self):
        # the (2,3) composition term cancels against its transposition
        assert pieri_d(2, fundamental(2)) == KVector.basis((1, 4))
        assert leibniz_d(2, fundamental(2)) == KVector.basis((1, 4))


class TestOracleEquivalence:
    @given(symbols, st.integers(0, 8))
    @settings(max_examples=200, deadline=None)
    def test_pieri_equals_leibniz(self, indices, h):
        v = KVector.basis(indices)
        assert pieri_d(h, v) == leibniz_d(h, v)

    @given(symbols, st.integers(1, 6), st.integers(1, 6))
    @settings(max_examples=100, deadline=None)
    def test_commutativity(self, indices, i, j):
        v = KVector.basis(indices)
        assert pieri_d(i, pieri_d(j, v)) == pieri_d(j, pieri_d(i, v))

    @given(symbols, st.integers(1, 6))
    @settings(max_examples=100, deadline=None)
    def test_weight_raising(self, indices, h):
        v = KVector.basis(indices)
        w0 = v.items()[0][0].weight()
        for sym, _ in pieri_d(h, v).items():
            assert sym.weight() == w0 + h

    @given(symbols, symbols, st.integers(0, 4), st.integers(-3, 3))
    @settings(max_examples=100, deadline=None)
    def test_linearity(self, a, b, h, c):
        if len(a) != len(b):
            return
        va, vb = KVector.basis(a), KVector.basis(b)
        combo = va.scale(c) + vb
        assert pieri_d(h, combo) == pieri_d(h, va).scale(c) + pieri_d(h, vb)


def test_leibniz_raw_terms():
    raw = leibniz_raw_terms(2, (2, 3, 5))
    assert len(raw) == 6
    assert set(raw) == {(4, 3, 5), (3, 4, 5), (3, 3, 6), (2, 5, 5), (2, 4, 6), (2, 3, 7)}


class TestInverseComponents:
    def test_small_components(self):
        es = inverse_components(3)
        d1 = DPolynomial.generator(1)
        d2 = DPolynomial.generator(2)
        d3 = DPolynomial.generator(3)
        assert es[0] == DPolynomial.identity()
        assert es[1] == -d1
        assert es[2] == d1 * d1 - d2
        assert es[3] == -(d1 * d1 * d1) + 2 * (d1 * d2) - d3

    def test_homogeneous(self):
        for m, e in enumerate(inverse_components(6)):
            assert e.is_homogeneous()
            assert e.degree() == m or e.is_zero()

    def test_series_inverse_law(self):
        # degree-by-degree, sum_i D_i E_{m-i} = 0 for m >= 1
        es = inverse_components(6)
        for m in range(1, 7):
            acc = DPolynomial.zero()
            for i in range(0, m + 1):
                acc = acc + DPolynomial.generator(i) * es[m - i]
            assert acc.is_zero()

    def test_annihilation_above_k(self):
        # E_h kills the k-th exterior power for h > k
        for k in range(1, 5):
            spanning = _spanning_set(k, 8)
            for h in range(k + 1, k + 5):
                e_h = inverse_components(h)[h]
                for v in spanning:
                    assert apply_operator(e_h, v).is_zero()

    def test_e1_on_line(self):
        e1 = inverse_components(1)[1]
        assert apply_operator(e1, KVector.basis((3,))) == KVector.basis((4,), -1)


def _spanning_set(k, max_weight):
    out = []

    def rec(prefix, lo):
        if len(prefix) == k:
            sym = tuple(prefix)
            if sum(sym) - k * (k + 1) // 2 <= max_weight:
                out.append(KVector.basis(sym))
            return
        for i in range(lo, max_weight + k + 1):
            if sum(prefix) + i <= max_weight + k * (k + 1) // 2:
                rec(prefix + [i], i + 1)

    rec([], 1)
    return out


class TestApplyOperator:
    def test_identity(self):
        v = KVector.basis((2, 4), 3)
        assert apply_operator(DPolynomial.identity(), v) == v

    def test_giambelli_shape(self):
        p = DPolynomial.generator(1) * DPolynomial.generator(2) - DPolynomial.generator(3)
        assert apply_operator(p, fundamental(2)) == KVector.basis((2, 4))

    def test_order_independence(self):
        p = DPolynomial.monomial(Partition((3, 2, 1)))
        v = KVector.basis((1, 4, 6))
        expected = pieri_d(1, pieri_d(2, pieri_d(3, v)))
        assert apply_operator(p, v) == expected


class TestIteratedD1:
    def test_golden_fourth_power(self):
        result = iterated_d1(4, fundamental(2))
        expected = (
            KVector.basis((3, 4), 2)
            + KVector.basis((2, 5), 3)
            + KVector.basis((1, 6))
        )
        assert result == expected

    def test_m_zero(self):
        v = KVector.basis((3, 7))
        assert iterated_d1(0, v) == v

    def test_binomial_formula(self):
        # D1^m(a ^ b) = sum binom(m,i) D_i a ^ D_{m-i} b for 1-vectors a, b
        from math import comb

        a, b = KVector.basis((1,)), KVector.basis((2,))
        for m in range(7):
            lhs = iterated_d1(m, wedge(a, b))
            rhs = KVector.zero(2)
            for i in range(m + 1):
                rhs = rhs + wedge(pieri_d(i, a), pieri_d(m - i, b)).scale(comb(m, i))
            assert lhs == rhs

    def test_negative_rejected(self):
        with pytest.raises(InvalidInputError):
            iterated_d1(-1, fundamental(2))


def test_group_law():
    # applying the inverse series after the direct series, matched by degree,
    # is the identity: sum_{i+j=m} E_i D_j v = 0 for m >= 1
    es = inverse_components(6)
    for v in (fundamental(2), KVector.basis((2, 4)), KVector.basis((1, 3, 5))):
        for m in range(1, 7):
            acc = KVector.zero(v.degree)
            for i in range(m + 1):
                acc = acc + apply_operator(es[i], pieri_d(m - i, v))
            assert acc.is_zero()
