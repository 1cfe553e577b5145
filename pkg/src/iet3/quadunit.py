"""Scaling units: Pell solutions and powers fixing residue classes mod Z[e].

The unit gamma = X + BY + 2AY*e, built from the fundamental solution of
X^2 - D*Y^2 = 1 with D = B^2 - 4AC, satisfies gamma*gamma' = 1 and maps
Z[e] onto itself.  Raising Lambda0 = max(gamma, 1/gamma) to the smallest
power s that fixes the residue classes of the window endpoints c and c+l
(mod Z[e]) yields the scaling factor used by the synthesis walk.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import PerfectSquare
from .qfield import FieldDesc, QuadNum, class_of

__all__ = ["PellSolution", "ScalingUnit", "solve_pell", "lemma_unit", "class_fixing_power"]


@dataclass(frozen=True)
class PellSolution:
    X: int
    Y: int
    D: int

    def check(self) -> bool:
        return self.X * self.X - self.D * self.Y * self.Y == 1 and self.Y >= 1


@dataclass(frozen=True)
class ScalingUnit:
    """Unit Lambda = gamma^s with Lambda > 1, Lambda' in (0, 1), Lambda*Lambda' = 1."""

    lam: QuadNum
    s: int
    gamma: QuadNum

    @property
    def lam_conj(self) -> QuadNum:
        return self.lam.conjugate()

    def mult_matrix(self):
        """Integer matrix of multiplication by Lambda on Z[e] in basis {1, e}."""
        one = self.lam
        eps = self.lam * self.lam.field.eps()
        m = [[one.a, eps.a], [one.b, eps.b]]
        for row in m:
            for v in row:
                if v.denominator != 1:
                    raise ValueError("Lambda does not preserve Z[e]")
        return [[int(m[0][0]), int(m[0][1])], [int(m[1][0]), int(m[1][1])]]

    def is_valid(self) -> bool:
        lam, conj = self.lam, self.lam_conj
        if not (lam > 1 and conj.sign() > 0 and conj < 1):
            return False
        if lam * conj != lam.field.one():
            return False
        m = self.mult_matrix()
        return abs(m[0][0] * m[1][1] - m[0][1] * m[1][0]) == 1


def solve_pell(D: int) -> PellSolution:
    """Fundamental solution of X^2 - D*Y^2 = 1 via the continued fraction of sqrt(D).

    Convergents p/q of the periodic expansion are scanned until
    p^2 - D q^2 = 1; the first hit is the smallest solution.
    """
    if D < 2:
        raise ValueError("D must be >= 2")
    a0 = math.isqrt(D)
    if a0 * a0 == D:
        raise PerfectSquare(f"{D} is a perfect square")
    # standard recurrence for the continued fraction of sqrt(D)
    m, d, a = 0, 1, a0
    p_prev, p = 1, a0
    q_prev, q = 0, 1
    while p * p - D * q * q != 1:
        m = d * a - m
        d = (D - m * m) // d
        a = (a0 + m) // d
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
    return PellSolution(p, q, D)


def lemma_unit(field: FieldDesc) -> QuadNum:
    """Unit Lambda0 > 1 with Lambda0 * Lambda0' = 1 and Lambda0 Z[e] = Z[e]."""
    pell = solve_pell(field.disc)
    gamma = field.num(pell.X + field.B * pell.Y, 2 * field.A * pell.Y)
    if gamma.sign() < 0:
        gamma = -gamma
    assert gamma * gamma.conjugate() == field.one()
    return gamma if gamma > 1 else gamma.inverse()


def class_fixing_power(lambda0: QuadNum, q: int, anchors) -> ScalingUnit:
    """Smallest power s >= 1 of lambda0 whose conjugate fixes each anchor's
    residue class mod Z[e]; returns Lambda = lambda0^s.

    The conjugate multiplies (1/q)Z[e] into itself, so each anchor's class
    orbit is a cycle of length <= q^2 and s is the lcm of the cycle lengths.
    """
    field = lambda0.field
    conj = lambda0.conjugate()
    s = 1
    for anchor in anchors:
        start = class_of(anchor, q)
        y = conj * anchor
        period = 1
        while class_of(y, q) != start:
            y = conj * y
            period += 1
            if period > q * q:
                raise RuntimeError("class orbit longer than q^2; unit is invalid")
        s = s * period // math.gcd(s, period)
    unit = ScalingUnit(lam=lambda0**s, s=s, gamma=lambda0)
    assert unit.is_valid()
    return unit
