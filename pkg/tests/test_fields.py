from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liestruct.fields import GF, QQ, FieldError

rationals = st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**4)


class TestFieldConstruction:
    def test_prime_required(self):
        for bad in (0, 1, 4, 6, 9, 15, 2**16 + 1):
            with pytest.raises(FieldError):
                GF(bad)

    def test_modulus_bound(self):
        with pytest.raises(FieldError):
            GF(65537)  # prime, but beyond the enumeration-friendly bound
        assert GF(65521).p == 65521

    def test_equality_and_hash(self):
        assert GF(3) == GF(3) and hash(GF(3)) == hash(GF(3))
        assert GF(3) != GF(5) and QQ != GF(3)


class TestRationalAxioms:
    @given(rationals, rationals, rationals)
    @settings(max_examples=60, deadline=None)
    def test_ring_laws(self, a, b, c):
        F = QQ
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(a, F.neg(a)) == F.zero()

    @given(rationals)
    @settings(max_examples=60, deadline=None)
    def test_inverses(self, a):
        if a != 0:
            assert QQ.mul(a, QQ.inv(a)) == 1

    def test_lowest_terms(self):
        x = QQ.coerce(Fraction(6, -4))
        assert x.numerator == -3 and x.denominator == 2


@pytest.mark.parametrize("p", [2, 3, 5, 7])
class TestPrimeFieldAxioms:
    def test_all_elements(self, p):
        F = GF(p)
        els = list(F.elements())
        for a in els:
            assert F.add(a, F.neg(a)) == 0
            if a != 0:
                assert F.mul(a, F.inv(a)) == F.one()
            for b in els:
                assert F.add(a, b) == F.add(b, a)
                assert F.mul(a, b) == F.mul(b, a)
                for c in els:
                    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
                    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))

    def test_residue_range(self, p):
        F = GF(p)
        assert F.coerce(-1) == p - 1
        assert F.coerce(p) == 0


class TestCoercion:
    def test_fraction_into_gf(self):
        assert GF(5).coerce(Fraction(1, 2)) == 3  # 2 * 3 = 6 = 1 mod 5

    def test_bad_denominator(self):
        with pytest.raises(FieldError):
            GF(5).coerce(Fraction(1, 5))

    def test_string_round_trip(self):
        for F, vals in ((QQ, ["-3/2", "0", "7"]), (GF(7), ["0", "3", "6"])):
            for s in vals:
                assert F.scalar_to_str(F.scalar_from_str(s)) == s
