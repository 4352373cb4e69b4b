import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pencilheights.algebra import (
    HomPoly2,
    MultiForm,
    UniPoly,
    binary_form,
    binary_linear_action,
    binary_root_multiplicities,
    content_hompoly2,
    exact_div_hompoly2,
    format_rat,
    gcd_hompoly2,
    gcd_unipoly,
    rat,
    resultant_binary,
    squarefree_decomposition,
    squarefree_factors_hompoly2,
)

T = UniPoly.x()
ONE = UniPoly.one()


def poly(*coeffs):
    """UniPoly from high-degree-first integer coefficients."""
    return UniPoly(list(reversed(coeffs)))


class TestRational:
    def test_format(self):
        assert format_rat(Fraction(3, 1)) == "3"
        assert format_rat(Fraction(-2, 3)) == "-2/3"
        assert rat("7/2") == Fraction(7, 2)
        assert rat(5) == Fraction(5)

    def test_reject_garbage(self):
        with pytest.raises(TypeError):
            rat(1.5)


class TestUniPoly:
    def test_degree_sentinel(self):
        assert UniPoly.zero().degree == -1
        assert UniPoly((0, 0)).is_zero()
        assert (T**3).degree == 3

    def test_divmod_roundtrip(self):
        f = poly(2, -3, 0, 5)
        g = poly(1, 1)
        q, r = divmod(f, g)
        assert q * g + r == f
        assert r.degree < g.degree

    def test_gcd_shared_linear_factor(self):
        assert gcd_unipoly(T * T - ONE, T - ONE) == T - ONE

    def test_gcd_monomials(self):
        assert gcd_unipoly(T**3, T**2) == T**2

    def test_gcd_coprime(self):
        # Euclid by hand: gcd(t^2+1, t^2+t) = 1
        assert gcd_unipoly(T * T + ONE, T * T + T) == ONE

    def test_gcd_of_zeros_rejected(self):
        with pytest.raises(ValueError):
            gcd_unipoly(UniPoly.zero(), UniPoly.zero())

    def test_gcd_monic_output(self):
        g = gcd_unipoly(poly(4, -4), poly(6, -6))
        assert g == T - ONE


class TestSquarefree:
    def test_double_linear(self):
        f = (T - ONE) ** 2 * (T + UniPoly((2,)))
        assert squarefree_decomposition(f) == [(T + UniPoly((2,)), 1), (T - ONE, 2)]

    def test_pure_power(self):
        assert squarefree_decomposition(T**5) == [(T, 5)]

    def test_square_of_quadratic(self):
        f = T**4 - 2 * T**2 + ONE
        assert squarefree_decomposition(f) == [(T * T - ONE, 2)]

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            squarefree_decomposition(UniPoly.zero())

    def test_reconstruction_on_random_products(self):
        # product of factor^multiplicity equals the input up to a constant
        rng = random.Random(11)
        for _ in range(1000):
            f = ONE
            while f.degree < 1:
                f = ONE
                budget = rng.randint(1, 12)
                while budget > 0:
                    deg = rng.randint(1, min(3, budget))
                    factor = UniPoly([rng.randint(-4, 4) for _ in range(deg)] + [rng.randint(1, 4)])
                    mult = rng.randint(1, max(1, budget // max(1, factor.degree)))
                    f = f * factor**mult
                    budget -= factor.degree * mult
            rebuilt = ONE
            for factor, mult in squarefree_decomposition(f):
                assert factor.leading() == 1
                rebuilt = rebuilt * factor**mult
            assert rebuilt == f.monic()

    def test_factors_pairwise_coprime(self):
        f = T**2 * (T - ONE) ** 2 * (T + ONE)
        factors = [p for p, _ in squarefree_decomposition(f)]
        for i in range(len(factors)):
            for j in range(i + 1, len(factors)):
                assert gcd_unipoly(factors[i], factors[j]) == ONE


class TestResultant:
    def test_linear_pair(self):
        # Res(t - a, t - b) = g(a) = a - b; here a = 1, b = 3
        assert resultant_binary(T - ONE, T - UniPoly((3,))) == -2

    def test_sylvester_3x3(self):
        assert resultant_binary(T**2, T + ONE) == 1

    def test_common_root_vanishes(self):
        f = T**3 + T - ONE
        assert resultant_binary(f, f) == 0

    def test_vanishes_iff_gcd_nonconstant(self):
        rng = random.Random(23)
        for _ in range(300):
            f = UniPoly([rng.randint(-3, 3) for _ in range(rng.randint(1, 6))] + [rng.randint(1, 3)])
            g = UniPoly([rng.randint(-3, 3) for _ in range(rng.randint(1, 6))] + [rng.randint(1, 3)])
            share = rng.random() < 0.5
            if share:
                common = T - UniPoly((rng.randint(-3, 3),))
                f, g = f * common, g * common
            res = resultant_binary(f, g)
            assert (res == 0) == (gcd_unipoly(f, g).degree > 0)


small_polys = st.lists(st.integers(-5, 5), min_size=0, max_size=5).map(UniPoly)


class TestRingAxioms:
    @settings(max_examples=150, deadline=None)
    @given(small_polys, small_polys, small_polys)
    def test_unipoly_ring(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c

    @settings(max_examples=100, deadline=None)
    @given(
        st.dictionaries(st.integers(0, 3), st.integers(-5, 5), max_size=4),
        st.dictionaries(st.integers(0, 3), st.integers(-5, 5), max_size=4),
        st.dictionaries(st.integers(0, 3), st.integers(-5, 5), max_size=4),
    )
    def test_hompoly2_ring(self, da, db, dc):
        a = HomPoly2(3, {i: c for i, c in da.items() if c})
        b = HomPoly2(3, {i: c for i, c in db.items() if c})
        c = HomPoly2(3, {i: c for i, c in dc.items() if c})
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


class TestHomPoly2:
    def test_homogenize_example(self):
        # t^2 + 1 at declared degree 2 becomes t^2 + s^2
        h = HomPoly2.homogenize(T * T + ONE, 2)
        assert h == HomPoly2(2, {2: 1, 0: 1})
        assert h.evaluate(1, 2) == 5

    def test_homogenize_pads_s_powers(self):
        assert HomPoly2.homogenize(T, 3) == HomPoly2(3, {1: 1})  # s^2 t

    def test_dehomogenize(self):
        h = HomPoly2(2, {1: 1, 2: 1})  # s t + t^2
        assert h.dehomogenize() == T + T * T

    def test_roundtrip(self):
        u = T**3 + 2 * T - ONE
        assert HomPoly2.homogenize(u, 3).dehomogenize() == u

    def test_homogenize_degree_too_small(self):
        with pytest.raises(ValueError):
            HomPoly2.homogenize(T**3, 2)

    def test_gcd_with_infinity_factor(self):
        s = HomPoly2(1, {0: 1})
        t = HomPoly2(1, {1: 1})
        a = s * s * (t - s)
        b = s * (t - s) * (t + s)
        g = gcd_hompoly2(a, b)
        assert g == s * (t - s)

    def test_gcd_against_zero(self):
        t = HomPoly2(1, {1: 1})
        assert gcd_hompoly2(HomPoly2.zero(3), t * t) == t * t
        with pytest.raises(ValueError):
            gcd_hompoly2(HomPoly2.zero(2), HomPoly2.zero(2))

    def test_exact_division(self):
        s = HomPoly2(1, {0: 1})
        t = HomPoly2(1, {1: 1})
        prod = (s + t) * (s - t) * s
        assert exact_div_hompoly2(prod, s) == (s + t) * (s - t)
        with pytest.raises(ValueError):
            exact_div_hompoly2(s * s, t)

    def test_content(self):
        s = HomPoly2(1, {0: 1})
        t = HomPoly2(1, {1: 1})
        fam = [s * t * (s + t), s * t * t]
        assert content_hompoly2(fam) == s * t

    def test_squarefree_factors_include_infinity(self):
        s = HomPoly2(1, {0: 1})
        t = HomPoly2(1, {1: 1})
        h = s * s * t * (t - s) ** 3
        factors = dict()
        for f, mult in squarefree_factors_hompoly2(h):
            factors[str(f)] = mult
        assert factors == {"s": 2, "t": 1, "t - s": 3}


class TestMultiForm:
    def test_validation(self):
        with pytest.raises(ValueError):
            MultiForm(3, 2, {(1, 0, 0): 1})  # does not sum to degree
        with pytest.raises(ValueError):
            MultiForm(1, 2, {(2,): 1})  # too few variables

    def test_zero_coefficients_dropped(self):
        f = MultiForm(2, 2, {(2, 0): 1, (0, 2): 0})
        assert f.support() == ((2, 0),)

    def test_permute_vars(self):
        f = MultiForm(3, 3, {(2, 0, 1): 1, (0, 2, 1): 2})
        g = f.permute_vars([1, 0, 2])
        assert g.terms == {(0, 2, 1): Fraction(1), (2, 0, 1): Fraction(2)}

    def test_root_multiplicities(self):
        assert sorted(binary_root_multiplicities(binary_form(4, {2: 1}))) == [2, 2]
        assert sorted(binary_root_multiplicities(binary_form(4, {3: 1}))) == [1, 3]
        assert sorted(binary_root_multiplicities(binary_form(4, {4: 1, 0: 1}))) == [1, 1, 1, 1]
        # root at infinity: X1 divides the leading structure
        assert sorted(binary_root_multiplicities(binary_form(5, {1: 1, 0: 1}))) == [1, 4]

    def test_linear_action_preserves_multiplicities(self):
        rng = random.Random(5)
        for _ in range(50):
            coeffs = {j: rng.randint(-4, 4) for j in range(5)}
            coeffs = {j: c for j, c in coeffs.items() if c}
            if not coeffs:
                continue
            f = binary_form(4, coeffs)
            g = binary_linear_action(f, ((1, 2), (0, 1)))
            assert sorted(binary_root_multiplicities(f)) == sorted(
                binary_root_multiplicities(g)
            )
