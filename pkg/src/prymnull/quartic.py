"""Tangent line at a basepoint of a pencil of plane quartics, and its discriminant.

For H = lam0 * F + lam1 * G with the basepoint z = (1:0:0), the tangent line
at z is parametrised by x0 = u, x1 = -c301 v, x2 = c310 v. Restricting H to
it gives a binary quartic in (u, v) with no v^0 and v^1 terms; the leftover
quadric has coefficients of degrees 3, 4, 5 in lam, and its discriminant
is an octic binary form whose roots are the parameters where the tangent
line is a bitangent.

All arithmetic is over ``Fraction``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

Monomial = tuple[int, int, int]

MONOMIALS: tuple[Monomial, ...] = tuple(
    (i, j, 4 - i - j) for i in range(4, -1, -1) for j in range(4 - i, -1, -1)
)


class QuarticError(ValueError):
    pass


# -- binary forms -----------------------------------------------------------

@dataclass(frozen=True)
class BinaryForm:
    """Homogeneous form of degree ``degree`` in (lam0, lam1).

    ``coeffs[m]`` multiplies lam0^(degree - m) * lam1^m.
    """

    degree: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.degree + 1:
            raise QuarticError(f"degree {self.degree} form needs {self.degree + 1} coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def zero(cls, degree: int) -> "BinaryForm":
        return cls(degree, (Fraction(0),) * (degree + 1))

    @classmethod
    def linear(cls, a: Fraction, b: Fraction) -> "BinaryForm":
        return cls(1, (a, b))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if self.degree != other.degree:
            raise QuarticError(f"cannot add forms of degrees {self.degree} and {other.degree}")
        return BinaryForm(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        return self + other.scale(-1)

    def __mul__(self, other: "BinaryForm") -> "BinaryForm":
        out = [Fraction(0)] * (self.degree + other.degree + 1)
        for m, a in enumerate(self.coeffs):
            if a:
                for n, b in enumerate(other.coeffs):
                    out[m + n] += a * b
        return BinaryForm(self.degree + other.degree, tuple(out))

    def __pow__(self, e: int) -> "BinaryForm":
        out = BinaryForm(0, (Fraction(1),))
        for _ in range(e):
            out = out * self
        return out

    def scale(self, q) -> "BinaryForm":
        q = Fraction(q)
        return BinaryForm(self.degree, tuple(q * c for c in self.coeffs))

    def __call__(self, lam0, lam1=1) -> Fraction:
        lam0, lam1 = Fraction(lam0), Fraction(lam1)
        d = self.degree
        return sum((c * lam0 ** (d - m) * lam1**m for m, c in enumerate(self.coeffs)), Fraction(0))

    def lam1_multiplicity(self) -> int:
        """Largest e with lam1^e dividing the form."""
        if self.is_zero():
            raise QuarticError("zero form")
        return next(m for m, c in enumerate(self.coeffs) if c)

    def dehomogenize(self) -> list[Fraction]:
        """Coefficients of f(t, 1) in t = lam0, constant term first."""
        return list(reversed(self.coeffs))

    def affine_degree(self) -> int:
        """Degree of f(t, 1): ``degree`` unless the lam0^degree coefficient vanishes."""
        return self.degree - self.lam1_multiplicity()


# -- univariate helpers over Q (constant term first) -------------------------

def _trim(p: list[Fraction]) -> list[Fraction]:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_divmod(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a, b = _trim(a), _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    lead = b[-1]
    while len(r) >= len(b):
        shift = len(r) - len(b)
        f = r[-1] / lead
        q[shift] = f
        for n, c in enumerate(b):
            r[shift + n] -= f * c
        r = _trim(r)
    return _trim(q), r


def poly_gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    """Monic gcd by the Euclidean algorithm."""
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if not a:
        return []
    return [c / a[-1] for c in a]


def poly_derivative(p: Sequence[Fraction]) -> list[Fraction]:
    return _trim([n * c for n, c in enumerate(p)][1:])


def squarefree_part(p: Sequence[Fraction]) -> list[Fraction]:
    p = _trim(p)
    if len(p) <= 1:
        return p
    g = poly_gcd(p, poly_derivative(p))
    return poly_divmod(p, g)[0]


def distinct_root_count(f: BinaryForm) -> int:
    """Distinct roots of f on P^1 over the complex numbers."""
    if f.is_zero():
        raise QuarticError("the zero form vanishes everywhere")
    affine = len(squarefree_part(f.dehomogenize())) - 1
    return affine + (1 if f.lam1_multiplicity() > 0 else 0)


# -- pencils ----------------------------------------------------------------

@dataclass(frozen=True)
class PencilQuartic:
    """lam0 * F + lam1 * G with F = sum a_ijk x^ijk and G = sum b_ijk x^ijk."""

    coeffs: Mapping[Monomial, tuple[Fraction, Fraction]]

    def __post_init__(self) -> None:
        clean = {}
        for mono, (a, b) in self.coeffs.items():
            if len(mono) != 3 or sum(mono) != 4 or min(mono) < 0:
                raise QuarticError(f"{mono} is not a degree 4 ternary monomial")
            clean[tuple(mono)] = (Fraction(a), Fraction(b))
        object.__setattr__(self, "coeffs", {m: clean.get(m, (Fraction(0), Fraction(0))) for m in MONOMIALS})

    def c(self, mono: Monomial) -> BinaryForm:
        a, b = self.coeffs[mono]
        return BinaryForm.linear(a, b)

    def has_basepoint(self) -> bool:
        return self.coeffs[(4, 0, 0)] == (0, 0)

    def evaluate(self, lam0, lam1=1) -> dict[Monomial, Fraction]:
        """The plane quartic of the pencil at a fixed parameter."""
        lam0, lam1 = Fraction(lam0), Fraction(lam1)
        return {m: lam0 * a + lam1 * b for m, (a, b) in self.coeffs.items()}

    def to_json(self) -> dict:
        return {f"{i}{j}{k}": [str(a), str(b)] for (i, j, k), (a, b) in self.coeffs.items()}

    @classmethod
    def random(cls, seed: int, bound: int = 9) -> "PencilQuartic":
        rng = random.Random(seed)
        coeffs = {}
        for mono in MONOMIALS:
            if mono == (4, 0, 0):
                coeffs[mono] = (0, 0)
            else:
                coeffs[mono] = (rng.randint(-bound, bound), rng.randint(-bound, bound))
        return cls(coeffs)


def restrict_to_tangent(p: PencilQuartic) -> dict[tuple[int, int], BinaryForm]:
    """Coefficients of H restricted to the tangent line at (1:0:0).

    Keys are (u-power, v-power); the value at (i, 4 - i) has degree 5 - i in lam.
    """
    if not p.has_basepoint():
        raise QuarticError("pencil does not pass through (1:0:0): the x0^4 coefficient is nonzero")
    c301, c310 = p.c((3, 0, 1)), p.c((3, 1, 0))
    minus_c301 = c301.scale(-1)
    out = {}
    for i in range(4, -1, -1):
        total = BinaryForm.zero(5 - i)
        for j in range(0, 5 - i):
            k = 4 - i - j
            total = total + (minus_c301**j) * (c310**k) * p.c((i, j, k))
        out[(i, 4 - i)] = total
    return out


def extract_quadric(restriction: Mapping[tuple[int, int], BinaryForm]) -> tuple[BinaryForm, BinaryForm, BinaryForm]:
    """Divide out v^2: returns the (u^2, uv, v^2) coefficients of degrees 3, 4, 5."""
    for key in ((4, 0), (3, 1)):
        if not restriction[key].is_zero():
            raise QuarticError(f"u^{key[0]} v^{key[1]} term does not vanish; z is not on the tangent line twice")
    return restriction[(2, 2)], restriction[(1, 3)], restriction[(0, 4)]


def discriminant(c3: BinaryForm, c4: BinaryForm, c5: BinaryForm) -> BinaryForm:
    return c4 * c4 - (c3 * c5).scale(4)


@dataclass(frozen=True)
class PencilReport:
    seed: int | None
    discriminant: BinaryForm
    distinct_roots: int

    @property
    def degree(self) -> int:
        return self.discriminant.degree

    @property
    def degree_drop(self) -> int:
        return self.discriminant.degree - self.discriminant.affine_degree()

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "discriminant": [str(c) for c in self.discriminant.coeffs],
            "degree": self.degree,
            "affine_degree": self.discriminant.affine_degree(),
            "degree_drop": self.degree_drop,
            "distinct_roots": self.distinct_roots,
        }


def analyse(p: PencilQuartic, seed: int | None = None) -> PencilReport:
    c3, c4, c5 = extract_quadric(restrict_to_tangent(p))
    delta = discriminant(c3, c4, c5)
    roots = 0 if delta.is_zero() else distinct_root_count(delta)
    return PencilReport(seed, delta, roots)


def bitangent_count_check(g: int, pencil_roots: int = 8) -> bool:
    """Bitangent parameters times twist counts on the genus g-3 tail match the R intersections."""
    from .counting import n_minus, n_pm
    from .curves import prym_null_numbers

    pn = prym_null_numbers("R", g)
    return pencil_roots * n_minus(g - 3) == pn.even and pencil_roots * n_pm(g - 3) == pn.odd

