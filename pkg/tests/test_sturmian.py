"""Sturmian words, the two-letter projections of exchange words, the
invariance criterion for Sturmian words, and the agreement between the
three-letter and two-letter decisions."""

from fractions import Fraction

import pytest

from iet3 import (SturmianSpec, complexity, corollary_crosscheck, make_field,
                  make_spec, parse_quadnum, sigma, sturmian_images_match,
                  sturmian_word, yasutomi)
from iet3.errors import UnknownLetter
from iet3.sturmian import _frac

F2 = make_field(1, 2, -1, 1)
F5 = make_field(1, 1, -1, 1)


@pytest.fixture(scope="module")
def spec():
    return make_spec(F2.eps(), parse_quadnum("1/2+1/2*e", F2),
                     parse_quadnum("-1/2*e", F2))


class TestSturmianWord:
    def test_known_prefix(self):
        assert sturmian_word(SturmianSpec(F2.eps(), F2.zero()), 5) == "00101"

    def test_empty(self):
        assert sturmian_word(SturmianSpec(F2.eps(), F2.zero()), 0) == ""

    def test_letter_frequency_is_slope(self):
        w = sturmian_word(SturmianSpec(F2.eps(), F2.zero()), 10**5)
        assert abs(w.count("1") / 10**5 - 0.41421356) < 0.01 * 0.41421356

    def test_floor_equals_ceiling_for_generic_intercept(self):
        sp_f = SturmianSpec(F2.eps(), parse_quadnum("1/2*e", F2), "floor")
        sp_c = SturmianSpec(F2.eps(), parse_quadnum("1/2*e", F2), "ceiling")
        assert sturmian_word(sp_f, 2000) == sturmian_word(sp_c, 2000)

    def test_floor_and_ceiling_differ_at_lattice_intercept(self):
        """With intercept 0 the orbit hits an integer at n=0, where the
        two rounding conventions disagree."""
        w_f = sturmian_word(SturmianSpec(F2.eps(), F2.zero(), "floor"), 10)
        w_c = sturmian_word(SturmianSpec(F2.eps(), F2.zero(), "ceiling"), 10)
        assert w_f != w_c

    def test_complexity_n_plus_one(self):
        for f, x0 in [(F2, F2.zero()), (F2, parse_quadnum("1/2", F2)),
                      (F5, parse_quadnum("1/3+1/3*e", F5))]:
            w = sturmian_word(SturmianSpec(f.eps(), x0), 4000)
            assert complexity(w, 30) == [1] + [n + 1 for n in range(1, 31)]

    def test_invalid_specs(self):
        with pytest.raises(ValueError):
            SturmianSpec(F2.rational(Fraction(1, 2)), F2.zero())  # rational slope
        with pytest.raises(ValueError):
            SturmianSpec(F2.eps(), F2.one())  # intercept out of range


class TestSigma:
    def test_examples(self):
        assert sigma("01", "BCA") == "0110"
        assert sigma("10", "B") == "10"
        assert sigma("01", "") == ""

    def test_unknown_letter(self):
        with pytest.raises(UnknownLetter):
            sigma("01", "ABX")

    def test_bad_variant(self):
        with pytest.raises(ValueError):
            sigma("11", "A")


class TestImagesMatch:
    def test_worked_spec(self, spec):
        assert sturmian_images_match(spec, 10**4)

    def test_radius_zero_vacuous(self, spec):
        assert sturmian_images_match(spec, 0)

    def test_perturbed_intercept_detected(self, spec):
        """Shifting the predicted intercept by 1/7 breaks the match
        within 100 letters."""
        from iet3 import code_orbit
        word = code_orbit(spec, 0, 200)
        img = sigma("01", word)[:100]
        good = _frac(-spec.c)
        bad = good + F2.rational(Fraction(1, 7))
        predicted = sturmian_word(SturmianSpec(F2.one() - spec.eps, bad), 100)
        assert img != predicted
        assert img == sturmian_word(
            SturmianSpec(F2.one() - spec.eps, good), 100)


class TestYasutomi:
    def test_zero_intercept(self):
        assert yasutomi(F2.eps(), F2.zero())

    def test_worked_intercept(self, spec):
        assert yasutomi(F2.eps(), _frac(-spec.c))

    def test_non_sturm_slope(self):
        non = make_field(8, -8, 1, -1).eps()
        assert not yasutomi(non, non.field.zero())

    def test_interval_symmetric_under_slope_reflection(self):
        """The condition interval for slope a and slope 1-a coincide, so
        the verdicts agree on conjugate-reflected intercepts."""
        for f in (F2, F5):
            a = f.eps()
            for num in [f.zero(), f.num(Fraction(1, 2), 0),
                        f.num(Fraction(1, 3), Fraction(1, 3)),
                        f.num(Fraction(9, 10), Fraction(0))]:
                x = _frac(num)
                y = _frac(f.one() - x)
                assert yasutomi(a, x) == yasutomi(f.one() - a, y)


class TestCorollary:
    def test_worked_agreement(self, spec):
        assert corollary_crosscheck(spec)

    def test_negative_agreement(self):
        sp = make_spec(F2.eps(), parse_quadnum("1/2+1/2*e", F2),
                       parse_quadnum("-3/2+7/2*e", F2))
        assert corollary_crosscheck(sp)

    def test_degenerate_rejected(self):
        sp = make_spec(F2.eps(), parse_quadnum("-1+4*e", F2),
                       parse_quadnum("-1/2*e", F2))
        with pytest.raises(ValueError):
            corollary_crosscheck(sp)
