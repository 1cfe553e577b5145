"""The decision procedure: verdicts and exact conditions, witness
synthesis with the retry ladder, the ancestor criterion, block starts,
and the reversal reduction for slopes with conjugate above 1."""

from fractions import Fraction

import pytest

from iet3 import (ancestor, check_block_starts, check_lemma_ancestor,
                  code_orbit, decide, is_sturm, make_field, make_spec,
                  parse_quadnum, reduce_by_reversal, step, synthesize,
                  Substitution)
from iet3.errors import NotApplicable, StepBudgetExceeded

F2 = make_field(1, 2, -1, 1)
F5R = make_field(1, -3, 1, -1)  # eps = (3-sqrt5)/2, conjugate > 1


@pytest.fixture(scope="module")
def spec():
    return make_spec(F2.eps(), parse_quadnum("1/2+1/2*e", F2),
                     parse_quadnum("-1/2*e", F2))


@pytest.fixture(scope="module")
def report(spec):
    return decide(spec)


class TestSturm:
    def test_worked_slopes(self):
        assert is_sturm(F2.eps())                      # conjugate < 0
        assert is_sturm(F5R.eps())                     # conjugate > 1
        non = make_field(8, -8, 1, -1).eps()           # (2-sqrt2)/4
        assert not is_sturm(non)
        assert not is_sturm(F2.rational(Fraction(1, 3)))


class TestDecide:
    def test_worked_invariant(self, spec, report):
        assert report.verdict == "Invariant"
        assert all(report.conditions.values())
        assert report.substitution.images == {
            "A": "BBCAC", "B": "BBCBBCAC", "C": "BCAC"}
        assert report.return_system.return_times == (5, 8, 4)
        assert report.unit.s == 1
        assert report.unit.lam == parse_quadnum("5+2*e", F2)
        assert all(report.checks.values())
        assert not report.reversed_reduction

    def test_worked_return_interval(self, report):
        ret = report.return_system
        assert ret.j_start == parse_quadnum("1-5/2*e", F2)
        assert ret.j_end == parse_quadnum("1/2-e", F2)
        assert ret.homothety_ok

    def test_negative_spec(self):
        sp = make_spec(F2.eps(), parse_quadnum("1/2+1/2*e", F2),
                       parse_quadnum("-3/2+7/2*e", F2))
        rep = decide(sp)
        assert rep.verdict == "NotInvariant"
        assert rep.conditions["sturm"]
        assert not (rep.conditions["intercept_left"]
                    and rep.conditions["intercept_right"])
        assert rep.substitution is None

    def test_degenerate(self):
        sp = make_spec(F2.eps(), parse_quadnum("-1+4*e", F2),
                       parse_quadnum("-1/2*e", F2))
        assert decide(sp).verdict == "Degenerate"

    def test_non_sturm_slope_never_invariant(self):
        f = make_field(8, -8, 1, -1)
        sp = make_spec(f.eps(), f.num(Fraction(1), Fraction(-1, 2)), f.zero())
        rep = decide(sp)
        assert rep.verdict == "NotInvariant"
        assert not rep.conditions["sturm"]


class TestSynthesize:
    def test_verified_witness(self, spec):
        unit, ret, sub = synthesize(spec)
        assert sub.verify_fixed_point(spec, 10**4)
        assert sub.check_eigenvector(spec.eps, unit.lam)
        assert sub.is_primitive()
        assert ret.homothety_ok

    def test_block_starts(self, spec, report):
        assert check_block_starts(spec, report.unit, report.substitution, 1000)

    def test_block_starts_reject_wrong_substitution(self, spec, report):
        wrong = Substitution(("A", "B", "C"),
                             {"A": "BBCAC", "B": "BCAC", "C": "BBCBBCAC"})
        assert not check_block_starts(spec, report.unit, wrong, 300)

    def test_budget_exhaustion_surfaces(self, monkeypatch):
        """A denominator that forces a huge scaling power fails fast with
        StepBudgetExceeded rather than walking forever."""
        monkeypatch.setenv("IET3_STEP_BUDGET", "2000")
        sp = make_spec(F5R.eps(), F5R.num(Fraction(7, 10), 0),
                       F5R.num(Fraction(-1, 10), 0))
        with pytest.raises(StepBudgetExceeded):
            decide(sp)


class TestAncestor:
    def test_discontinuity_scales(self, spec, report):
        conj = report.unit.lam_conj
        j_start, j_end = conj * spec.c, conj * spec.end
        for z0 in (spec.d1, spec.d2):
            anc = ancestor(spec, j_start, j_end, z0)
            assert anc == conj * z0

    def test_lemma_equivalence_on_orbit(self, spec, report):
        z = F2.zero()
        for _ in range(300):
            assert check_lemma_ancestor(spec, report.unit, z)
            z, _ = step(spec, z)


@pytest.fixture(scope="module")
def rev_spec():
    return make_spec(F5R.eps(), F5R.num(Fraction(1, 2), Fraction(1, 2)),
                     F5R.num(0, Fraction(-1, 2)))


class TestReversal:
    def test_not_applicable_for_negative_conjugate(self, spec):
        with pytest.raises(NotApplicable):
            reduce_by_reversal(spec)

    def test_reduced_slope(self, rev_spec):
        red = reduce_by_reversal(rev_spec)
        assert red.eps == F5R.one() - rev_spec.eps
        assert red.eps.conjugate().sign() < 0
        assert red.l == rev_spec.l and red.c == rev_spec.c

    def test_reduced_word_is_mirror(self, rev_spec):
        """The reduced spec codes the reversed word up to the A/C swap:
        the factor languages agree under reverse-and-swap."""
        red = reduce_by_reversal(rev_spec)
        w = code_orbit(rev_spec, -400, 400)
        v = code_orbit(red, -400, 400)
        swap = str.maketrans("AC", "CA")
        n = 6
        facs_w = {w[i:i + n] for i in range(len(w) - n)}
        facs_v = {v[i:i + n][::-1].translate(swap) for i in range(len(v) - n)}
        assert facs_w == facs_v

    def test_reversal_synthesis_verifies(self, rev_spec):
        rep = decide(rev_spec)
        assert rep.verdict == "Invariant"
        assert rep.reversed_reduction
        assert all(rep.checks.values())
        assert rep.substitution.verify_fixed_point(rev_spec, 10**4)
        assert rep.substitution.check_eigenvector(rev_spec.eps, rep.unit.lam)
        assert check_block_starts(rev_spec, rep.unit, rep.substitution, 1000)
