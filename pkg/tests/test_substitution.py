"""Substitutions: morphism mechanics, incidence matrices and their
convention, eigenvalues in the quadratic field, primitivity, fixed-point
verification, and factor complexity."""

import pytest

from iet3 import (Substitution, complexity, count_factors, code_orbit,
                  make_field, make_spec, parse_quadnum)
from iet3.errors import NoSquareRoot, UnknownLetter
from iet3.substitution import _matmul

F2 = make_field(1, 2, -1, 1)
WORKED = Substitution(("A", "B", "C"),
                      {"A": "BBCAC", "B": "BBCBBCAC", "C": "BCAC"})


@pytest.fixture(scope="module")
def spec():
    return make_spec(F2.eps(), parse_quadnum("1/2+1/2*e", F2),
                     parse_quadnum("-1/2*e", F2))


class TestMorphism:
    def test_apply(self):
        assert WORKED("AC") == "BBCACBCAC"
        assert WORKED("") == ""

    def test_unknown_letter(self):
        with pytest.raises(UnknownLetter):
            WORKED("AXB")

    def test_text_round_trip(self):
        text = WORKED.to_text()
        assert "A -> BBCAC" in text
        assert Substitution.from_text(text) == WORKED

    def test_power(self):
        sq = WORKED.power(2)
        assert sq.images["A"] == WORKED(WORKED.images["A"])

    def test_relabel_and_reverse(self):
        swapped = WORKED.relabel({"A": "C", "B": "B", "C": "A"})
        # image of C is the A-image with every A and C exchanged
        assert swapped.images["C"] == "BBACA"
        rev = WORKED.reversed_images()
        assert rev.images["A"] == "CACBB"


class TestIncidence:
    def test_worked_rows(self):
        assert WORKED.incidence() == [[1, 2, 2], [1, 4, 3], [1, 1, 2]]

    def test_composition_convention(self):
        """Row-per-source convention: N of (phi after psi) is N_psi * N_phi."""
        psi = Substitution(("A", "B", "C"), {"A": "AB", "B": "C", "C": "AC"})
        comp = Substitution(("A", "B", "C"),
                            {a: WORKED(psi.images[a]) for a in "ABC"})
        assert comp.incidence() == _matmul(psi.incidence(), WORKED.incidence())

    def test_power_incidence(self):
        assert WORKED.power(2).incidence() == _matmul(WORKED.incidence(),
                                                      WORKED.incidence())


class TestSpectrum:
    def test_worked_eigenvalues(self):
        vals = WORKED.eigenvalues(F2)
        lam = parse_quadnum("5+2*e", F2)       # 3 + 2*sqrt2
        lam_conj = parse_quadnum("1-2*e", F2)  # 3 - 2*sqrt2
        assert F2.one() in vals
        assert lam in vals and lam_conj in vals
        assert len(vals) == 3

    def test_eigenvalue_outside_field(self):
        fib3 = Substitution(("A", "B", "C"),
                            {"A": "AB", "B": "C", "C": "A"})  # x^3 = x^2 + 1
        with pytest.raises(NoSquareRoot):
            fib3.eigenvalues(F2)

    def test_fibonacci_in_golden_field(self):
        f5 = make_field(1, 1, -1, 1)  # eps = (sqrt5-1)/2
        fib = Substitution(("0", "1"), {"0": "01", "1": "0"})
        vals = fib.eigenvalues(f5)
        assert f5.num(1, 1) in vals   # (1+sqrt5)/2
        assert f5.num(0, -1) in vals  # (1-sqrt5)/2

    def test_eigenvector_identity(self, spec):
        lam = parse_quadnum("5+2*e", F2)
        assert WORKED.check_eigenvector(spec.eps, lam)
        assert not WORKED.check_eigenvector(spec.eps, lam * lam)

    def test_primitive(self):
        assert WORKED.is_primitive()
        reducible = Substitution(("A", "B", "C"),
                                 {"A": "AB", "B": "BA", "C": "C"})
        assert not reducible.is_primitive()


class TestFixedPoint:
    def test_worked_fixed_point(self, spec):
        assert WORKED.verify_fixed_point(spec, 10**4)

    def test_perturbed_images_fail(self, spec):
        for images in [
            {"A": "BBCAC", "B": "BBCBBCAC", "C": "BCCA"},  # scrambled C
            {"A": "BCAC", "B": "BBCBBCAC", "C": "BCAC"},   # wrong A
        ]:
            bad = Substitution(("A", "B", "C"), images)
            assert not bad.verify_fixed_point(spec, 200)

    def test_fibonacci_fixed_point(self):
        fib = Substitution(("0", "1"), {"0": "01", "1": "0"})
        w = "0"
        for _ in range(15):
            w = fib(w)
        assert fib(w).startswith(w)


class TestComplexity:
    def test_count_factors(self):
        assert count_factors("ABAB", 2) == 2  # AB, BA
        assert count_factors("AAAA", 3) == 1

    def test_exchange_word_complexity(self, spec):
        w = code_orbit(spec, -2000, 2000)
        assert complexity(w, 12) == [1] + [2 * n + 1 for n in range(1, 13)]
