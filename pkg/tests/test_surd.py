import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from reebforce.errors import FieldMixError, InputError
from reebforce.surd import (
    CoprimePair,
    Surd,
    enumerate_coprime_in_interval,
    is_resonant,
    normalize,
)
from conftest import brute_force_interval, oracle_compare, oracle_floor

# radicands kept square-free-ish but not exclusively, to exercise
# normalization; 0 covers the rational case
RADICANDS = [0, 2, 3, 5, 6, 7, 8, 10, 12, 13, 18, 45, 50]

surds = st.builds(
    Surd,
    a=st.integers(-60, 60),
    b=st.integers(-60, 60),
    c=st.integers(1, 40),
    d=st.sampled_from(RADICANDS),
)


class TestNormalization:
    def test_square_factor_absorbed(self):
        s = normalize(2, 2, 2, 8)
        assert (s.a, s.b, s.c, s.d) == (1, 2, 1, 2)

    def test_zero(self):
        assert normalize(0, 0, 5, 3) == Surd.rational(0)

    def test_eigenvalue_constant(self):
        s = normalize(3, 1, 2, 5)
        assert (s.a, s.b, s.c, s.d) == (3, 1, 2, 5)

    def test_zero_denominator_rejected(self):
        with pytest.raises(InputError):
            normalize(1, 1, 0, 2)

    def test_negative_radicand_rejected(self):
        with pytest.raises(InputError):
            normalize(1, 1, 1, -2)

    @given(surds)
    def test_canonical_invariants(self, s):
        assert s.c > 0
        assert s.d >= 0
        assert (s.b == 0) == (s.d == 0)
        assert math.gcd(math.gcd(abs(s.a), abs(s.b)), s.c) == 1

    @given(surds)
    def test_idempotent(self, s):
        assert Surd(s.a, s.b, s.c, s.d) == s

    @given(surds)
    def test_unique_representation_of_equal_values(self, s):
        # same value written with blown-up integers normalizes back
        t = Surd(3 * s.a, 3 * s.b, 3 * s.c, s.d)
        assert (t.a, t.b, t.c, t.d) == (s.a, s.b, s.c, s.d)


class TestParse:
    def test_full_form(self):
        assert Surd.parse("(1+1*sqrt(2))/1") == Surd(1, 1, 1, 2)

    def test_negative_coefficient(self):
        assert Surd.parse("(-1+1*sqrt(2))/1") == Surd(-1, 1, 1, 2)

    def test_rational_shorthand(self):
        assert Surd.parse("3/4") == Surd.rational(3, 4)
        assert Surd.parse("-7") == Surd.rational(-7)

    def test_sqrt_shorthand(self):
        assert Surd.parse("sqrt(5)") == Surd.sqrt(5)

    @pytest.mark.parametrize("bad", ["", "sqrt(-1)", "1/0", "(1+sqrt(2))/2", "x"])
    def test_rejects(self, bad):
        with pytest.raises(InputError):
            Surd.parse(bad)

    @given(surds)
    def test_str_roundtrip(self, s):
        assert Surd.parse(str(s)) == s


class TestCompare:
    def test_known_values(self):
        assert Surd.sqrt(2).compare(Surd.rational(3, 2)) < 0
        assert Surd(3, 1, 2, 5).compare(Surd.sqrt(5)) > 0
        assert Surd.sqrt(2).compare(Surd.sqrt(2)) == 0

    def test_cross_field(self):
        assert Surd.sqrt(2) < Surd.sqrt(3)
        assert Surd(1, 1, 1, 2) > Surd(0, 1, 1, 5)  # 1+sqrt2 > sqrt5
        assert Surd(0, 2, 1, 2) > Surd(0, 1, 1, 7)  # sqrt8 > sqrt7

    @given(surds, surds)
    @settings(max_examples=300)
    def test_against_oracle(self, s, t):
        expected = oracle_compare(s, t)
        if expected is not None:
            assert s.compare(t) == expected

    @given(surds, surds)
    def test_antisymmetry(self, s, t):
        assert s.compare(t) == -t.compare(s)

    @given(surds, surds, surds)
    @settings(max_examples=200)
    def test_transitivity(self, s, t, u):
        if s.compare(t) <= 0 and t.compare(u) <= 0:
            assert s.compare(u) <= 0


class TestFloor:
    def test_known_values(self):
        assert Surd.sqrt(2).floor() == 1
        assert (-Surd.sqrt(2)).floor() == -2
        assert (Surd(1, 1, 1, 2) * 2).floor() == 4

    @given(surds)
    @settings(max_examples=300)
    def test_against_oracle(self, s):
        expected = oracle_floor(s)
        if expected is not None:
            assert s.floor() == expected

    @given(surds)
    def test_bracketing(self, s):
        n = s.floor()
        assert s.compare(Surd.rational(n)) >= 0
        assert s.compare(Surd.rational(n + 1)) < 0

    @given(surds)
    def test_ceil_relation(self, s):
        c = s.ceil()
        assert c == s.floor() + (0 if s.compare(Surd.rational(s.floor())) == 0 else 1)


class TestArithmetic:
    @given(surds, surds)
    def test_add_sub_roundtrip(self, s, t):
        if t.d in (0, s.d) or s.d == 0:
            assert (s + t) - t == s

    @given(surds)
    def test_inverse(self, s):
        if not s.is_zero:
            assert s * s.inverse() == Surd.rational(1)

    def test_field_mix_rejected(self):
        with pytest.raises(FieldMixError):
            Surd.sqrt(2) + Surd.sqrt(3)
        with pytest.raises(FieldMixError):
            Surd.sqrt(2) * Surd.sqrt(5)

    def test_reciprocal_of_sqrt2(self):
        assert Surd.sqrt(2).inverse() == Surd(0, 1, 2, 2)  # sqrt2/2

    def test_int_and_fraction_coercion(self):
        s = Surd.sqrt(2)
        assert s + 1 == Surd(1, 1, 1, 2)
        assert s * Fraction(1, 2) == Surd(0, 1, 2, 2)


class TestResonance:
    def test_examples(self):
        assert is_resonant(2, Surd.rational(3, 2))
        assert not is_resonant(5, Surd.sqrt(2))
        assert not is_resonant(3, Surd.rational(1, 2))

    def test_bad_cover(self):
        with pytest.raises(InputError):
            is_resonant(0, Surd.sqrt(2))


class TestCoprimePair:
    def test_zero_zero_rejected(self):
        with pytest.raises(InputError):
            CoprimePair(0, 0)

    def test_simple_flag(self):
        assert CoprimePair(2, 1).is_simple
        assert not CoprimePair(2, 4).is_simple


class TestEnumeration:
    def test_known_values(self):
        s2 = Surd.sqrt(2)
        got = enumerate_coprime_in_interval(s2 - 1, s2, 2, "open")
        assert [(f.p, f.q) for f in got] == [(1, 1), (2, 1)]
        got = enumerate_coprime_in_interval(Surd.rational(0), Surd.rational(1), 3)
        assert [(f.p, f.q) for f in got] == [(2, 1), (3, 1), (3, 2)]
        tight_hi = Surd.rational(1414213563, 1000000000)
        assert enumerate_coprime_in_interval(s2, tight_hi, 1) == []

    def test_kinds(self):
        zero, one = Surd.rational(0), Surd.rational(1)
        closed = enumerate_coprime_in_interval(zero, one, 2, "closed")
        assert [(f.p, f.q) for f in closed] == [(1, 0), (1, 1), (2, 1)]
        half_open = enumerate_coprime_in_interval(zero, one, 2, "open_closed")
        assert [(f.p, f.q) for f in half_open] == [(1, 1), (2, 1)]
        other_half = enumerate_coprime_in_interval(zero, one, 2, "closed_open")
        assert [(f.p, f.q) for f in other_half] == [(1, 0), (2, 1)]

    def test_errors(self):
        one = Surd.rational(1)
        with pytest.raises(InputError):
            enumerate_coprime_in_interval(one, one, 3)
        with pytest.raises(InputError):
            enumerate_coprime_in_interval(one, one + 1, 0)
        with pytest.raises(InputError):
            enumerate_coprime_in_interval(one, one + 1, 3, "clopen")

    @given(
        lo=surds,
        width_num=st.integers(1, 40),
        max_p=st.integers(1, 12),
        kind=st.sampled_from(["open", "closed", "open_closed", "closed_open"]),
    )
    @settings(max_examples=250, deadline=None)
    def test_against_brute_force(self, lo, width_num, max_p, kind):
        hi = lo + Fraction(width_num, 7)
        got = [(f.p, f.q) for f in
               enumerate_coprime_in_interval(lo, hi, max_p, kind)]
        assert got == brute_force_interval(lo, hi, max_p, kind)
