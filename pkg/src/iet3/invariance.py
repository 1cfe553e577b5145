"""Deciding substitution invariance of a 3iet word and synthesizing the
substitution as the first return map on a scaled copy of the domain.

The decision itself is three exact sign checks on Galois conjugates.  For
an Invariant verdict the substitution is constructed by tracking whole
subintervals of J = lam' * [c, c+l) through the exchange until they
return to J: all points of a tracked interval share one return name, so
translating the interval and recording visited letters both computes the
images and proves their correctness (a straddled discontinuity aborts the
walk instead of being split).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .errors import NotApplicable, StepBudgetExceeded, StraddlesDiscontinuity
from .iet import IetSpec, inverse_step, make_spec, step
from .qfield import QuadNum, denominator, sign_of_surd
from .quadunit import ScalingUnit, class_fixing_power, lemma_unit
from .substitution import Substitution

__all__ = [
    "ReturnSystem",
    "DecisionReport",
    "is_sturm",
    "decide",
    "synthesize",
    "ancestor",
    "check_lemma_ancestor",
    "check_block_starts",
    "reduce_by_reversal",
]

DEFAULT_STEP_BUDGET = 10**6
_REVERSAL_SWAP = {"A": "C", "B": "B", "C": "A"}


def _step_budget() -> int:
    return int(os.environ.get("IET3_STEP_BUDGET", DEFAULT_STEP_BUDGET))


@dataclass(frozen=True)
class ReturnSystem:
    """First return data on J = lam' * [c, c+l)."""

    j_start: QuadNum
    j_end: QuadNum
    subintervals: Tuple[Tuple[QuadNum, QuadNum], ...]  # K1, K2, K3
    return_names: Tuple[str, str, str]
    homothety_ok: bool

    @property
    def return_times(self) -> Tuple[int, int, int]:
        return tuple(len(w) for w in self.return_names)


@dataclass
class DecisionReport:
    verdict: str  # "Invariant" | "NotInvariant" | "Degenerate"
    spec: IetSpec
    conditions: Dict[str, bool] = dc_field(default_factory=dict)
    unit: Optional[ScalingUnit] = None
    return_system: Optional[ReturnSystem] = None
    substitution: Optional[Substitution] = None
    checks: Dict[str, bool] = dc_field(default_factory=dict)
    reversed_reduction: bool = False


def is_sturm(eps: QuadNum) -> bool:
    """eps in (0, 1) and its conjugate outside (0, 1)."""
    if eps.b == 0:
        return False
    zero, one = eps.field.zero(), eps.field.one()
    conj = eps.conjugate()
    return zero < eps < one and not (zero < conj < one)


def reduce_by_reversal(spec: IetSpec) -> IetSpec:
    """Parameters (1-eps, l, c), coding the reversed word up to an A/C swap.

    Applicable when eps' > 1; the reduced slope has conjugate 1-eps' < 0.
    """
    if not spec.eps.conjugate() > 1:
        raise NotApplicable("reversal reduction needs eps' > 1")
    return make_spec(spec.field.one() - spec.eps, spec.l, spec.c)


def ancestor(spec: IetSpec, j_start: QuadNum, j_end: QuadNum, z0: QuadNum,
             budget: Optional[int] = None) -> QuadNum:
    """The point of [j_start, j_end) whose return block contains z0.

    Found by backward iteration; the first backward hit of J is the
    ancestor because the forward path from it to z0 avoids J.
    """
    budget = budget if budget is not None else _step_budget()
    z = z0
    for _ in range(budget):
        if j_start <= z < j_end:
            return z
        z, _letter = inverse_step(spec, z)
    raise StepBudgetExceeded(f"no ancestor of {z0} found within {budget} steps")


def check_lemma_ancestor(spec: IetSpec, unit: ScalingUnit, z0: QuadNum) -> bool:
    """Ancestor-equals-scaling criterion against its sign-check form.

    True iff  anc_J(z0) == lam'*z0  agrees with  z0' <= 0 <= (T(z0))'.
    """
    conj = unit.lam_conj
    j_start, j_end = conj * spec.c, conj * spec.end
    left = ancestor(spec, j_start, j_end, z0) == conj * z0
    tz, _ = step(spec, z0)
    right = z0.conjugate().sign() <= 0 and tz.conjugate().sign() >= 0
    return left == right


def check_block_starts(spec: IetSpec, unit: ScalingUnit, sub: Substitution,
                       window: int = 1000) -> bool:
    """Are the block starts of the substitution decomposition exactly the
    orbit points falling in J = lam' * [c, c+l)?

    The two-sided word is cut into blocks sub(u_m) aligned at position 0.
    True iff, for every n in (-window, window), T^n(0) lies in J exactly
    when a block starts at n, and the started letter names the scaled
    subinterval lam' * I_i containing the point.
    """
    conj = unit.lam_conj
    j_start, j_end = conj * spec.c, conj * spec.end
    pieces = tuple((conj * a, conj * b) for a, b in spec.subintervals())
    points = {0: spec.field.zero()}
    letters = {}
    z = points[0]
    for n in range(window):
        z, letters[n] = step(spec, z)
        points[n + 1] = z
    z = points[0]
    for n in range(0, -window, -1):
        z, letters[n - 1] = inverse_step(spec, z)
        points[n - 1] = z
    starts = {}
    pos, n = 0, 0
    while pos < window:
        starts[pos] = letters[n]
        pos += len(sub.images[letters[n]])
        n += 1
    pos, n = 0, -1
    while pos > -window + 1:
        pos -= len(sub.images[letters[n]])
        starts[pos] = letters[n]
        n -= 1
    for n in range(-window + 1, window):
        z = points[n]
        in_j = j_start <= z < j_end
        if in_j != (n in starts):
            return False
        if in_j:
            lo, hi = pieces["ABC".index(starts[n])]
            if not (lo <= z < hi):
                return False
    return True


def _walk_interval(spec: IetSpec, lo: QuadNum, hi: QuadNum,
                   j_start: QuadNum, j_end: QuadNum, budget: int):
    """Track [lo, hi) through the exchange until it returns inside J.

    Runs on integer coordinates (all endpoints scaled by their common
    denominator) so each step costs a few integer surd signs.
    """
    f = spec.field
    L = denominator([spec.eps, spec.l, spec.c, j_start, j_end, lo, hi])
    A, B, D, branch = f.A, f.B, f.disc, f.branch

    def ipair(x: QuadNum) -> Tuple[int, int]:
        return (int(L * x.a), int(L * x.b))

    def diff_sign(p, q) -> int:  # sign of q - p
        pa, pb = q[0] - p[0], q[1] - p[1]
        return sign_of_surd(2 * A * pa - B * pb, branch * pb, D)

    bounds = tuple((ipair(a), ipair(b)) for a, b in spec.subintervals())
    shifts = tuple(ipair(s) for s in spec.shifts())
    js, je = ipair(j_start), ipair(j_end)
    ilo, ihi = ipair(lo), ipair(hi)
    name = []
    for _ in range(budget):
        placed = False
        for idx in range(3):
            blo, bhi = bounds[idx]
            if diff_sign(blo, ilo) >= 0 and diff_sign(ilo, bhi) > 0:
                if diff_sign(bhi, ihi) > 0:
                    raise StraddlesDiscontinuity(
                        "tracked interval crosses a discontinuity of the exchange"
                    )
                sh = shifts[idx]
                ilo = (ilo[0] + sh[0], ilo[1] + sh[1])
                ihi = (ihi[0] + sh[0], ihi[1] + sh[1])
                name.append("ABC"[idx])
                placed = True
                break
        if not placed:
            raise StraddlesDiscontinuity("tracked interval escaped the domain")
        if diff_sign(js, ilo) >= 0 and diff_sign(ihi, je) >= 0:
            out = tuple(f.num(Fraction(p[0], L), Fraction(p[1], L))
                        for p in (ilo, ihi))
            return "".join(name), out
        if (diff_sign(ilo, js) > 0 and diff_sign(js, ihi) > 0) or (
                diff_sign(ilo, je) > 0 and diff_sign(je, ihi) > 0):
            raise StraddlesDiscontinuity("tracked interval straddles an endpoint of J")
    raise StepBudgetExceeded(f"return walk exceeded {budget} steps")


def _synthesize_with_unit(spec: IetSpec, unit: ScalingUnit,
                          budget: int) -> Tuple[ReturnSystem, Substitution]:
    conj = unit.lam_conj
    j_start, j_end = conj * spec.c, conj * spec.end
    pieces = tuple((conj * lo, conj * hi) for lo, hi in spec.subintervals())
    shifts = spec.shifts()
    names: List[str] = []
    homothety_ok = True
    for idx, (lo, hi) in enumerate(pieces):
        name, landed = _walk_interval(spec, lo, hi, j_start, j_end, budget)
        names.append(name)
        expected = (conj * (spec.subintervals()[idx][0] + shifts[idx]),
                    conj * (spec.subintervals()[idx][1] + shifts[idx]))
        if landed != expected:
            homothety_ok = False
    sub = Substitution(("A", "B", "C"), dict(zip("ABC", names)))
    ret = ReturnSystem(j_start, j_end, pieces, tuple(names), homothety_ok)
    return ret, sub


def _unit_ladder(spec: IetSpec):
    """Candidate scaling units: d'-power first, then doubled, then full d."""
    field = spec.field
    lam0 = lemma_unit(field)
    q = denominator([spec.c, spec.end])
    anchors = [spec.c, spec.end]
    base = class_fixing_power(lam0, q, anchors)
    yield base
    s = base.s * 2
    while s <= q * q:
        yield ScalingUnit(lam=lam0**s, s=s, gamma=lam0)
        s *= 2
    # property d): fix every residue class of (1/q)Z[e]
    full = class_fixing_power(
        lam0, q, [field.num(Fraction(i, q), Fraction(j, q)) for i in range(q) for j in range(q)]
    )
    if full.s != base.s:
        yield full


def synthesize(spec: IetSpec, radius: int = 10**4):
    """Scaling unit, return system and verified substitution for `spec`.

    Requires decide(spec) == Invariant.  For eps' > 1 the walk runs on the
    reversal-reduced parameters and the images are transported back
    (reverse each image and swap A with C); in every case the result must
    pass the fixed-point and eigenvector checks or the next unit in the
    retry ladder is tried.
    """
    conj_sign = spec.eps.conjugate().sign()
    reduced = conj_sign > 0
    work = reduce_by_reversal(spec) if reduced else spec
    budget = _step_budget()
    last_error: Optional[Exception] = None
    for unit in _unit_ladder(work):
        try:
            ret, sub = _synthesize_with_unit(work, unit, budget)
        except StraddlesDiscontinuity as exc:
            last_error = exc
            continue
        except StepBudgetExceeded as exc:
            # a larger unit only makes the return walk longer; give up now
            last_error = exc
            break
        cand = sub
        if reduced:
            cand = sub.relabel(_REVERSAL_SWAP).reversed_images()
        if not ret.homothety_ok:
            continue
        if not cand.verify_fixed_point(spec, radius):
            continue
        if not cand.check_eigenvector(spec.eps, unit.lam):
            continue
        return unit, ret, cand
    if last_error is not None:
        raise last_error
    raise StraddlesDiscontinuity("no unit in the retry ladder produced a verified substitution")


def decide(spec: IetSpec, radius: int = 10**4, synthesize_witness: bool = True) -> DecisionReport:
    """Full decision: verdict, exact condition record, and (when Invariant)
    a synthesized, verified substitution."""
    report = DecisionReport(verdict="NotInvariant", spec=spec)
    if spec.l.in_z_eps():
        report.verdict = "Degenerate"
        return report

    eps_c = spec.eps.conjugate()
    c_c = spec.c.conjugate()
    l_c = spec.l.conjugate()
    one = spec.field.one()
    lo = eps_c if eps_c < one - eps_c else one - eps_c
    hi = one - eps_c if eps_c < one - eps_c else eps_c
    sturm = is_sturm(spec.eps)
    # intercept conditions of the two Sturmian shadows: -c' and c'+l'
    cond_left = lo <= -c_c <= hi
    cond_right = lo <= c_c + l_c <= hi
    report.conditions = {
        "sturm": sturm,
        "parameters_in_field": True,
        "intercept_left": cond_left,
        "intercept_right": cond_right,
    }
    if not (sturm and cond_left and cond_right):
        return report

    report.verdict = "Invariant"
    report.reversed_reduction = eps_c.sign() > 0
    if synthesize_witness:
        unit, ret, sub = synthesize(spec, radius)
        report.unit = unit
        report.return_system = ret
        report.substitution = sub
        report.checks = {
            "fixed_point": True,  # enforced by synthesize
            "eigenvector": True,  # enforced by synthesize
            "homothety": ret.homothety_ok,
            "primitive": sub.is_primitive(),
        }
    return report
