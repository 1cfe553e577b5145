"""Substitutions on finite alphabets, incidence matrices, fixed points,
and factor complexity.

Incidence convention: N[i][j] counts occurrences of letter j in the image
of letter i (row per source letter).  Under this convention the column
vector (1-eps, 1-2*eps, -eps) is a right eigenvector of N for the small
conjugate of the scaling unit, which is the identity every synthesis
result is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import NoSquareRoot, UnknownLetter
from .qfield import FieldDesc, QuadNum, sqrt_in_field

__all__ = ["Substitution", "complexity", "count_factors"]


@dataclass(frozen=True)
class Substitution:
    alphabet: Tuple[str, ...]
    images: Dict[str, str]

    def __post_init__(self):
        for letter in self.alphabet:
            img = self.images.get(letter)
            if not img:
                raise UnknownLetter(f"no (nonempty) image for letter {letter!r}")
            for ch in img:
                if ch not in self.alphabet:
                    raise UnknownLetter(f"image letter {ch!r} not in alphabet")

    # -- word action ----------------------------------------------------------

    def __call__(self, word: str) -> str:
        try:
            return "".join(self.images[ch] for ch in word)
        except KeyError as exc:
            raise UnknownLetter(f"letter {exc.args[0]!r} not in alphabet") from None

    def power(self, n: int) -> "Substitution":
        images = {a: a for a in self.alphabet}
        for _ in range(n):
            images = {a: self(images[a]) for a in self.alphabet}
        return Substitution(self.alphabet, images)

    def reversed_images(self) -> "Substitution":
        return Substitution(self.alphabet, {a: self.images[a][::-1] for a in self.alphabet})

    def relabel(self, mapping: Dict[str, str]) -> "Substitution":
        """Conjugate by a permutation of the alphabet."""
        images = {
            mapping[a]: "".join(mapping[ch] for ch in self.images[a])
            for a in self.alphabet
        }
        return Substitution(self.alphabet, images)

    # -- incidence matrix -----------------------------------------------------

    def incidence(self) -> List[List[int]]:
        """N[i][j] = number of occurrences of alphabet[j] in the image of alphabet[i]."""
        return [
            [self.images[a].count(b) for b in self.alphabet] for a in self.alphabet
        ]

    def is_primitive(self) -> bool:
        """Some power n <= |alphabet|^2 of the incidence matrix is positive."""
        k = len(self.alphabet)
        n = self.incidence()
        m = n
        for _ in range(k * k):
            if all(v > 0 for row in m for v in row):
                return True
            m = _matmul(m, n)
        return False

    def eigenvalues(self, field: FieldDesc) -> List[QuadNum]:
        """Exact eigenvalues of the incidence matrix as elements of the field.

        Raises NoSquareRoot if some eigenvalue lies outside Q(e); only
        alphabets of size <= 3 are supported.
        """
        n = self.incidence()
        k = len(n)
        if k > 3:
            raise ValueError("exact eigenvalues only for alphabets of size <= 3")
        coeffs = _char_poly(n)  # monic, highest degree first
        roots: List[QuadNum] = []
        coeffs = _strip_rational_roots(coeffs, roots, field)
        if len(coeffs) == 3:  # quadratic a=1: x^2 + px + q
            p, q = coeffs[1], coeffs[2]
            disc = p * p - 4 * q
            if disc < 0:
                raise NoSquareRoot("complex eigenvalues")
            root = sqrt_in_field(field, disc)  # raises if outside the field
            half = field.rational(1) / 2
            roots.append((-p + root) * half)
            roots.append((-p - root) * half)
        elif len(coeffs) == 2:
            roots.append(field.rational(-coeffs[1]))
        elif len(coeffs) > 1:
            raise NoSquareRoot(
                "characteristic polynomial has an irreducible cubic factor"
            )
        return roots

    def check_eigenvector(self, eps: QuadNum, lam: QuadNum) -> bool:
        """N * (1-eps, 1-2*eps, -eps)^T = lam' * same, exactly."""
        if len(self.alphabet) != 3:
            return False
        one = eps.field.one()
        v = (one - eps, one - 2 * eps, -eps)
        conj = lam.conjugate()
        n = self.incidence()
        for i in range(3):
            lhs = n[i][0] * v[0] + n[i][1] * v[1] + n[i][2] * v[2]
            if lhs != conj * v[i]:
                return False
        return True

    # -- fixed point ----------------------------------------------------------

    def verify_fixed_point(self, spec, radius: int) -> bool:
        """Does the orbit word of `spec` decompose into images aligned at 0?

        Checks that phi(u_0) phi(u_1) ... is a prefix of u_0 u_1 ... and
        phi(u_-1), phi(u_-2), ... stack up to the suffix ending at -1, as
        far as whole images fit within +-radius.
        """
        from .iet import OrbitCoder  # local import to avoid a cycle

        coder = OrbitCoder(spec)
        fwd_gen = coder.forward()
        fwd = "".join(next(fwd_gen) for _ in range(radius))
        pos = 0
        for ch in fwd:
            img = self.images[ch]
            if pos + len(img) > radius:
                break
            if fwd[pos : pos + len(img)] != img:
                return False
            pos += len(img)
        bwd_gen = coder.backward()
        bwd = "".join(next(bwd_gen) for _ in range(radius))  # u_-1, u_-2, ...
        pos = 0
        for ch in bwd:
            img = self.images[ch]
            if pos + len(img) > radius:
                break
            if bwd[pos : pos + len(img)] != img[::-1]:
                return False
            pos += len(img)
        return True

    # -- serialization --------------------------------------------------------

    def to_text(self) -> str:
        return "\n".join(f"{a} -> {self.images[a]}" for a in self.alphabet)

    @classmethod
    def from_text(cls, text: str) -> "Substitution":
        alphabet, images = [], {}
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            left, sep, right = line.partition("->")
            if not sep:
                raise ValueError(f"bad substitution line {line!r}")
            alphabet.append(left.strip())
            images[left.strip()] = right.strip()
        return cls(tuple(alphabet), images)

    def __str__(self):
        return ", ".join(f"{a}->{self.images[a]}" for a in self.alphabet)


def _matmul(x, y):
    k = len(x)
    return [
        [sum(x[i][t] * y[t][j] for t in range(k)) for j in range(k)] for i in range(k)
    ]


def _char_poly(n) -> List[int]:
    """Monic characteristic polynomial coefficients of a 1x1..3x3 int matrix."""
    k = len(n)
    if k == 1:
        return [1, -n[0][0]]
    if k == 2:
        tr = n[0][0] + n[1][1]
        det = n[0][0] * n[1][1] - n[0][1] * n[1][0]
        return [1, -tr, det]
    tr = n[0][0] + n[1][1] + n[2][2]
    minors = (
        n[1][1] * n[2][2] - n[1][2] * n[2][1]
        + n[0][0] * n[2][2] - n[0][2] * n[2][0]
        + n[0][0] * n[1][1] - n[0][1] * n[1][0]
    )
    det = (
        n[0][0] * (n[1][1] * n[2][2] - n[1][2] * n[2][1])
        - n[0][1] * (n[1][0] * n[2][2] - n[1][2] * n[2][0])
        + n[0][2] * (n[1][0] * n[2][1] - n[1][1] * n[2][0])
    )
    return [1, -tr, minors, -det]


def _strip_rational_roots(coeffs: List[int], roots: List[QuadNum], field) -> List[int]:
    """Divide out integer roots (monic polynomial) and record them."""
    while len(coeffs) > 3:
        const = coeffs[-1]
        candidates = {0} if const == 0 else {
            s * d for d in range(1, abs(const) + 1) if const % d == 0 for s in (1, -1)
        }
        found = None
        for r in candidates:
            if _poly_eval(coeffs, r) == 0:
                found = r
                break
        if found is None:
            raise NoSquareRoot("cubic with no rational root; eigenvalue outside Q(e)")
        coeffs = _poly_deflate(coeffs, found)
        roots.append(field.rational(found))
    return coeffs


def _poly_eval(coeffs, x):
    value = 0
    for coef in coeffs:
        value = value * x + coef
    return value


def _poly_deflate(coeffs, root):
    out = [coeffs[0]]
    for coef in coeffs[1:-1]:
        out.append(out[-1] * root + coef)
    return out


def count_factors(letters: str, n: int) -> int:
    """Number of distinct length-n factors of the given finite window."""
    if n == 0:
        return 1
    return len({letters[i : i + n] for i in range(len(letters) - n + 1)})


def complexity(letters: str, n_max: int) -> List[int]:
    """Factor counts C(0..n_max) of the window (a lower bound for the word)."""
    return [count_factors(letters, n) for n in range(n_max + 1)]
