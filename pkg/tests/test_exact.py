import math
from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from supercong.exact import (
    CycloRational,
    NegativeValuation,
    ResidueInt,
    Root,
    collapsed_poch3,
    collapsed_poch4,
    congruent,
    half_harmonic2,
    pochhammer,
    pochhammer_cyclo,
    reduce_mod,
    vp,
)

small_fractions = st.fractions(min_value=-6, max_value=6, max_denominator=9)
small_primes = st.sampled_from([3, 5, 7, 11, 13])


def brute_inverse(a, m):
    return next(x for x in range(m) if a * x % m == 1)


class TestVp:
    def test_examples(self):
        assert vp(F(50, 3), 5) == 2
        assert vp(F(17, 16), 3) == 0
        assert vp(F(27, 32), 3) == 3

    def test_negative_valuation(self):
        assert vp(F(1, 5), 5) == -1
        assert vp(F(3, 50), 5) == -2

    def test_zero_is_infinite(self):
        assert vp(0, 7) == math.inf
        assert congruent(F(2, 3), F(2, 3), 7, 10**6)


class TestReduceMod:
    def test_inverse_oracle(self):
        # 17/16 mod 27: brute-force inverse of 16 is 22, and 17*22 = 374 = 13*27 + 23
        assert brute_inverse(16, 27) == 22
        assert reduce_mod(F(17, 16), 3, 3) == ResidueInt(23, 3, 3)

    def test_zero_and_negative(self):
        assert reduce_mod(0, 7, 2).value == 0
        assert reduce_mod(-4, 3, 3).value == 23

    def test_rejects_negative_valuation(self):
        with pytest.raises(NegativeValuation):
            reduce_mod(F(1, 3), 3, 2)

    @given(small_fractions, small_fractions, small_primes)
    def test_ring_homomorphism(self, x, y, p):
        assume(x.denominator % p != 0 and y.denominator % p != 0)
        k = 3
        assert reduce_mod(x + y, p, k) == reduce_mod(x, p, k) + reduce_mod(y, p, k)
        assert reduce_mod(x * y, p, k) == reduce_mod(x, p, k) * reduce_mod(y, p, k)


class TestResidueInt:
    def test_normalization_and_ops(self):
        r = ResidueInt(30, 5, 2)
        assert r.value == 5 and r.modulus == 25
        assert (r + 21).value == 1
        assert (r * r).value == 0
        assert (-ResidueInt(1, 5, 2)).value == 24
        assert (ResidueInt(2, 5, 2) ** -1).value == 13

    def test_mismatched_moduli_refuse_to_combine(self):
        with pytest.raises(ValueError):
            ResidueInt(1, 5, 2) + ResidueInt(1, 5, 3)
        with pytest.raises(ValueError):
            ResidueInt(1, 5, 2) * ResidueInt(1, 7, 2)


class TestCycloRational:
    def test_omega_relations(self):
        w = CycloRational.zeta(Root.OMEGA)
        assert w * w == CycloRational(F(-1), F(-1), Root.OMEGA)  # w^2 = -1 - w
        assert w**3 == CycloRational(F(1), F(0), Root.OMEGA)
        assert w * w + w + 1 == CycloRational(F(0), F(0), Root.OMEGA)

    def test_i_relations(self):
        i = CycloRational.zeta(Root.I)
        assert i * i == CycloRational(F(-1), F(0), Root.I)
        assert (1 / i) == -i

    def test_norm_is_rational(self):
        for root in Root:
            x = CycloRational(F(3, 2), F(-5, 7), root)
            prod = x * x.conj()
            assert prod.im == 0
            assert prod.re == x.norm()

    def test_tags_never_mix(self):
        w = CycloRational.zeta(Root.OMEGA)
        i = CycloRational.zeta(Root.I)
        with pytest.raises(ValueError):
            w + i

    def test_as_rational(self):
        w = CycloRational.zeta(Root.OMEGA)
        assert (w + w.conj()).as_rational() == -1  # w + w^2 = -1
        with pytest.raises(ValueError):
            w.as_rational()


class TestPochhammer:
    def test_examples(self):
        assert pochhammer(F(1, 2), 3) == F(15, 8)
        assert pochhammer(F(7, 3), 0) == 1
        assert pochhammer(-2, 2) == 2  # ((1-p)/2)_{(p-1)/2} at p = 5

    def test_cyclo_examples(self):
        w = CycloRational.zeta(Root.OMEGA)
        x = 1 + w * F(3, 2)
        assert pochhammer_cyclo(x, 1) == x
        assert pochhammer_cyclo(x, 0) == CycloRational(F(1), F(0), Root.OMEGA)
        # (1 + (5/2)w)(1 + (5/2)w^2) = 1 + (5/2)(w + w^2) + (25/4) w^3 = 19/4
        prod = pochhammer_cyclo(1 + w * F(5, 2), 1) * pochhammer_cyclo(1 + w * w * F(5, 2), 1)
        assert prod.as_rational() == F(19, 4)

    @given(small_fractions, st.integers(0, 20), st.integers(0, 20))
    @settings(max_examples=60)
    def test_composition(self, a, m, n):
        assert pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + m, n)


class TestCollapsedProducts:
    def test_examples(self):
        assert collapsed_poch3(1, F(1, 2), 3, 1) == F(35, 8)
        assert collapsed_poch3(F(2, 7), F(1, 3), 11, 0) == 1
        assert collapsed_poch4(1, F(1, 2), 3, 1) == F(-65, 16)
        assert collapsed_poch4(F(2, 7), F(1, 3), 11, 0) == 1

    @given(small_fractions, small_fractions, small_primes, st.integers(0, 5))
    @settings(max_examples=60)
    def test_conjugate_collapse_omega(self, u, v, p, k):
        w = CycloRational.zeta(Root.OMEGA)
        w2 = w * w
        triple = (
            pochhammer_cyclo(u + v * p * w, k)
            * pochhammer_cyclo(u + v * p * w2, k)
            * pochhammer(u + v * p, k)
        )
        assert triple.im == 0
        assert triple.re == collapsed_poch3(u, v, p, k)

    @given(small_fractions, small_fractions, small_primes, st.integers(0, 5))
    @settings(max_examples=60)
    def test_conjugate_collapse_i(self, u, v, p, k):
        i = CycloRational.zeta(Root.I)
        quad = (
            pochhammer(u + v * p, k)
            * pochhammer(u - v * p, k)
            * pochhammer_cyclo(u + v * p * i, k)
            * pochhammer_cyclo(u - v * p * i, k)
        )
        assert quad.im == 0
        assert quad.re == collapsed_poch4(u, v, p, k)

    def test_congruence_to_plain_powers(self):
        # both sides evaluated directly: the cubic collapse mod p^3, quartic mod p^4
        assert reduce_mod(collapsed_poch3(F(1, 2), F(1, 2), 5, 2), 5, 3) == reduce_mod(
            pochhammer(F(1, 2), 2) ** 3, 5, 3
        )
        assert reduce_mod(collapsed_poch4(F(1, 2), F(1, 2), 5, 2), 5, 4) == reduce_mod(
            pochhammer(F(1, 2), 2) ** 4, 5, 4
        )

    @given(small_fractions, small_fractions, small_primes, st.integers(0, 5))
    @settings(max_examples=60)
    def test_congruence_collapse_random(self, u, v, p, k):
        assume(u.denominator % p != 0 and v.denominator % p != 0)
        assume(vp(pochhammer(u, k), p) == 0)
        assert reduce_mod(collapsed_poch3(u, v, p, k), p, 3) == reduce_mod(
            pochhammer(u, k) ** 3, p, 3
        )
        assert reduce_mod(collapsed_poch4(u, v, p, k), p, 4) == reduce_mod(
            pochhammer(u, k) ** 4, p, 4
        )


class TestHalfHarmonic:
    def test_examples(self):
        assert half_harmonic2(3) == 1
        assert half_harmonic2(5) == F(5, 4)

    @pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19, 23])
    def test_divisible_by_p(self, p):
        assert vp(half_harmonic2(p), p) >= 1
