"""The normalized exchange of three intervals and orbit coding.

The map acts on [c, c+l) with discontinuities d1 = c+l-1+eps, d2 = c+eps:

    T(x) = x + 1-eps    on I1 = [c, d1)         letter A
    T(x) = x + 1-2*eps  on I2 = [d1, d2)        letter B
    T(x) = x - eps      on I3 = [d2, c+l)       letter C

Valid parameters satisfy eps in (0,1), 1 > l > max(1-eps, eps) and
0 in [c, c+l); all intervals are left-closed right-open.

Orbit coding iterates this with exact arithmetic.  `OrbitCoder` clears
denominators once and runs the loop on integer coordinates, so a step is
a couple of big-int multiplications; `code_orbit` is the convenient
QuadNum-level wrapper.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

from .errors import OutOfDomain, RationalSlope
from .qfield import FieldDesc, QuadNum, denominator, sign_of_surd

__all__ = ["IetSpec", "make_spec", "normalize", "step", "inverse_step", "code_orbit",
           "non_degenerate", "OrbitCoder", "orbit_window"]

LETTERS = "ABC"


@dataclass(frozen=True)
class IetSpec:
    eps: QuadNum
    l: QuadNum
    c: QuadNum
    raw: Optional[Tuple[QuadNum, QuadNum, QuadNum, QuadNum]] = None

    @property
    def field(self) -> FieldDesc:
        return self.eps.field

    @property
    def d1(self) -> QuadNum:
        return self.c + self.l - 1 + self.eps

    @property
    def d2(self) -> QuadNum:
        return self.c + self.eps

    @property
    def end(self) -> QuadNum:
        return self.c + self.l

    def shifts(self):
        one = self.field.one()
        return (one - self.eps, one - 2 * self.eps, -self.eps)

    def subintervals(self):
        return (
            (self.c, self.d1),
            (self.d1, self.d2),
            (self.d2, self.end),
        )

    def contains(self, x: QuadNum) -> bool:
        return self.c <= x < self.end


def make_spec(eps: QuadNum, l: QuadNum, c: QuadNum, raw=None) -> IetSpec:
    """Validate the parameter constraints and build the spec."""
    if eps.b == 0:
        raise RationalSlope(f"eps = {eps} is rational; the exchange is not minimal")
    zero, one = eps.field.zero(), eps.field.one()
    if not (zero < eps < one):
        raise ValueError(f"eps = {eps} not in (0, 1)")
    if not (l < one and l > eps and l > one - eps):
        raise ValueError(f"l = {l} violates 1 > l > max(1-eps, eps)")
    if not (c <= zero < c + l):
        raise ValueError(f"0 not in [c, c+l) with c = {c}, l = {l}")
    return IetSpec(eps, l, c, raw)


def normalize(alpha1: QuadNum, alpha2: QuadNum, alpha3: QuadNum, x0: QuadNum) -> IetSpec:
    """Reduce raw interval lengths and starting point to (eps, l, c).

    eps = (a1+a2)/mu, l = (a1+a2+a3)/mu, c = -x0/mu with mu = a1+2*a2+a3;
    the coded point becomes 0.
    """
    for alpha in (alpha1, alpha2, alpha3):
        if alpha.sign() <= 0:
            raise ValueError("interval lengths must be positive")
    total = alpha1 + alpha2 + alpha3
    if not (x0 >= 0 and x0 < total):
        raise OutOfDomain(f"x0 = {x0} outside [0, {total})")
    mu = alpha1 + 2 * alpha2 + alpha3
    eps = (alpha1 + alpha2) / mu
    if eps.b == 0:
        raise RationalSlope(f"eps = {eps} is rational; the exchange is not minimal")
    return make_spec(eps, total / mu, -x0 / mu, raw=(alpha1, alpha2, alpha3, x0))


def step(spec: IetSpec, x: QuadNum) -> Tuple[QuadNum, str]:
    """One forward application: (T(x), coding letter of x)."""
    if not spec.contains(x):
        raise OutOfDomain(f"{x} not in [{spec.c}, {spec.end})")
    shifts = spec.shifts()
    if x < spec.d1:
        return x + shifts[0], "A"
    if x < spec.d2:
        return x + shifts[1], "B"
    return x + shifts[2], "C"


def inverse_step(spec: IetSpec, y: QuadNum) -> Tuple[QuadNum, str]:
    """One backward application: (T^-1(y), coding letter of the preimage).

    The images tile [c, c+l) as T(I3) = [c, c+l-eps), T(I2) = [c+l-eps,
    c+1-eps), T(I1) = [c+1-eps, c+l).
    """
    if not spec.contains(y):
        raise OutOfDomain(f"{y} not in [{spec.c}, {spec.end})")
    shifts = spec.shifts()
    if y < spec.end - spec.eps:
        return y - shifts[2], "C"
    if y < spec.c + 1 - spec.eps:
        return y - shifts[1], "B"
    return y - shifts[0], "A"


def non_degenerate(spec: IetSpec) -> bool:
    """True iff l is not in Z[e] (the full-complexity condition)."""
    return not spec.l.in_z_eps()


class OrbitCoder:
    """Exact orbit coding of 0 on integer coordinates.

    Every orbit point is (ia + ib*e)/L with integers ia, ib, where L
    clears the denominators of c, l and eps.  A comparison against a
    discontinuity is the sign of an integer surd P + Q*sqrt(D).
    """

    def __init__(self, spec: IetSpec):
        self.spec = spec
        f = spec.field
        L = denominator([spec.c, spec.l, spec.eps])
        self.L = L
        self.A, self.B, self.D, self.branch = f.A, f.B, f.disc, f.branch

        def ipair(x: QuadNum):
            xa, xb = L * x.a, L * x.b
            return (int(xa), int(xb))

        self.c = ipair(spec.c)
        self.d1 = ipair(spec.d1)
        self.d2 = ipair(spec.d2)
        self.end = ipair(spec.end)
        # forward shifts for letters A, B, C
        self.shift = tuple(ipair(s) for s in spec.shifts())
        # backward branch boundaries: c+l-eps and c+1-eps
        self.b1 = ipair(spec.end - spec.eps)
        self.b2 = ipair(spec.c + 1 - spec.eps)

    def _less(self, x, d) -> bool:
        pa, pb = x[0] - d[0], x[1] - d[1]
        P = 2 * self.A * pa - self.B * pb
        Q = self.branch * pb
        return sign_of_surd(P, Q, self.D) < 0

    def letter_of(self, x) -> int:
        if self._less(x, self.d1):
            return 0
        if self._less(x, self.d2):
            return 1
        return 2

    def forward(self, start=(0, 0)) -> Iterator[str]:
        """Letters u_0, u_1, ... coding the forward orbit."""
        x = start
        while True:
            i = self.letter_of(x)
            yield LETTERS[i]
            s = self.shift[i]
            x = (x[0] + s[0], x[1] + s[1])

    def backward(self, start=(0, 0)) -> Iterator[str]:
        """Letters u_-1, u_-2, ... coding the backward orbit."""
        x = start
        while True:
            if self._less(x, self.b1):
                i = 2
            elif self._less(x, self.b2):
                i = 1
            else:
                i = 0
            s = self.shift[i]
            x = (x[0] - s[0], x[1] - s[1])
            yield LETTERS[i]

    def point(self, x) -> QuadNum:
        from fractions import Fraction

        return QuadNum(Fraction(x[0], self.L), Fraction(x[1], self.L), self.spec.field)


def code_orbit(spec: IetSpec, frm: int, to: int) -> str:
    """Letters u_frm ... u_{to-1} of the word coding the orbit of 0."""
    if frm > to:
        raise ValueError("empty range must have frm <= to")
    coder = OrbitCoder(spec)
    parts = []
    if frm < 0:
        back = []
        gen = coder.backward()
        for _ in range(-frm):
            back.append(next(gen))
        # u_-1 comes out first; trim to [frm, min(to,0)) and restore order
        keep = back[-to:] if to < 0 else back
        parts.append("".join(reversed(keep)))
    if to > 0:
        gen = coder.forward()
        fwd = [next(gen) for _ in range(to)]
        parts.append("".join(fwd[max(frm, 0) :]))
    return "".join(parts)


def orbit_window(spec: IetSpec, radius: int) -> str:
    """The letters at positions [-radius, radius), as one string."""
    return code_orbit(spec, -radius, radius)
