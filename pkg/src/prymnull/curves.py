"""Catalog of test-curve families and their intersection data.

Rows on M are the classical one-parameter families (C^i, C^0, Y, and the
quartic-tail pencil Q). Rows on R are their lifts; each lift records the
base family it pushes forward to and with which multiplicity, so the
projection formula can be checked against the pullback maps.

Note: ``k`` in this module is the number of Prym roots on the genus g-1
curve B, 2^{2g-2} - 1, not the summation bound of the class formulas.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .class_space import BasisClass, ClassVector, Space, _check_genus, normalize_label
from .counting import s_minus, s_plus
from .known_classes import mu

BASE_CURVES = ("Ci", "C0", "Y", "Q")
R_CURVES = ("Fi", "Gi", "Hi", "F0", "G0", "H0", "Y0", "Z0", "T0", "R")
SPIN_CURVES = ("Y0n",)
INDEXED = ("Ci", "Fi", "Gi", "Hi")
CURVE_NAMES = BASE_CURVES + R_CURVES + SPIN_CURVES


class CurveError(ValueError):
    pass


@dataclass(frozen=True)
class PrymNullPair:
    even: int
    odd: int

    @property
    def total(self) -> int:
        return self.even + self.odd


@dataclass(frozen=True)
class TestCurveRow:
    __test__ = False  # not a pytest class

    name: str
    genus: int
    index: int | None
    space: Space
    row: Mapping[BasisClass, Fraction] = field(default_factory=dict)
    pushforward_multiplicity: Fraction | None = None
    base_curve: str | None = None

    @property
    def display_name(self) -> str:
        return _display(self.name, self.index)

    def as_class(self) -> ClassVector:
        return ClassVector(self.genus, self.space, self.row)

    def base_row(self) -> "TestCurveRow | None":
        if self.base_curve is None:
            return None
        return row(self.base_curve, self.genus, self.index if self.base_curve == "Ci" else None)

    def to_json(self) -> dict:
        data = {
            "curve": self.name,
            "genus": self.genus,
            "index": self.index,
            "space": self.space.value,
            "row": {k.label: str(v) for k, v in self.as_class().coeffs.items()},
            "base_curve": self.base_curve,
            "pushforward_multiplicity": None if self.pushforward_multiplicity is None else str(self.pushforward_multiplicity),
        }
        return data


def _display(name: str, index: int | None) -> str:
    return f"{name[0]}_{index}" if name in INDEXED else name


def _validate(name: str, g: int, i: int | None) -> None:
    if name not in CURVE_NAMES:
        raise CurveError(f"unknown test curve {name!r}; expected one of {', '.join(CURVE_NAMES)}")
    _check_genus(g)
    if name in INDEXED:
        if i is None or not 2 <= i <= g - 1:
            raise CurveError(f"{name} needs an index 2 <= i <= {g - 1}, got {i!r}")
    elif i is not None:
        raise CurveError(f"{name} takes no index")


def prym_roots_on_B(g: int) -> int:
    return 2 ** (2 * g - 2) - 1


def _m(g: int, i: int) -> BasisClass:
    """M-basis boundary class for the raw index i (Delta_i = Delta_{g-i})."""
    return BasisClass(Space.M, "", min(i, g - i))


def _r(kind: str, i: int) -> BasisClass:
    return BasisClass(Space.R, kind, i)


def row(name: str, g: int, i: int | None = None) -> TestCurveRow:
    _validate(name, g, i)
    M, R, S = Space.M, Space.R, Space.SPLUS
    lam_M, lam_R = BasisClass(M, "lambda"), BasisClass(R, "lambda")
    k = prym_roots_on_B(g)

    def make(space, entries, m=None, base=None, index=None):
        return TestCurveRow(
            name, g, index, space,
            ClassVector(g, space, entries).coeffs,
            None if m is None else Fraction(m),
            base,
        )

    if name == "Ci":
        return make(M, {_m(g, i): 2 - 2 * i}, index=i)
    if name == "C0":
        return make(M, {lam_M: 1, _m(g, 0): 12, _m(g, 1): -1})
    if name == "Y":
        return make(M, {_m(g, 0): 2 - 2 * g, _m(g, 1): 1})
    if name == "Q":
        return make(M, {lam_M: 3, _m(g, 0): 27, _m(g, 3): -1})

    if name in ("Fi", "Gi", "Hi"):
        kind = {"Fi": "n", "Gi": "t", "Hi": "p"}[name]
        return make(R, {normalize_label(g, kind, i): 2 - 2 * i}, 1, "Ci", index=i)
    if name == "F0":
        return make(R, {lam_R: 1, _r("p", 0): 12, _r("t", 1): -1}, 1, "C0")
    if name == "G0":
        return make(R, {lam_R: 3, _r("t", 0): 12, _r("b", 0): 12, _r("n", 1): -3}, 3, "C0")
    if name == "H0":
        return make(R, {lam_R: 3, _r("p", 0): 12, _r("b", 0): 12, _r("p", 1): -3}, 3, "C0")
    if name == "Y0":
        return make(R, {_r("t", 0): 2 - 2 * g, _r("n", 1): 1}, 1, "Y")
    if name == "Z0":
        return make(R, {_r("p", 0): 4 * k * (1 - g), _r("t", 1): k, _r("p", 1): k}, 2 * k, "Y")
    if name == "T0":
        return make(R, {_r("b", 0): 2 ** (2 * g - 2) * (1 - g), _r("n", 1): 1, _r("p", 1): k}, 2 ** (2 * g - 2), "Y")
    if name == "R":
        return make(R, {lam_R: 3, _r("p", 0): 27, normalize_label(g, "t", 3): -1}, 1, "Q")

    # Y0n: pulled back along the coarse spin map, whose degree over Delta_0 is 2^{2g-2}
    entries = {
        BasisClass(S, "n", 0): 2 ** (2 * g - 1) * (1 - g),
        BasisClass(S, "plus", 1): s_plus(g - 1),
        BasisClass(S, "minus", 1): s_minus(g - 1),
    }
    return make(S, entries, 2 ** (2 * g - 2), "Y")


def pair(r: TestCurveRow, c: ClassVector) -> Fraction:
    """Degree of the class ``c`` on the family ``r``."""
    if (r.genus, r.space) != (c.genus, c.space):
        raise CurveError(
            f"cannot pair {r.display_name} (g={r.genus}, {r.space.value}) with a class on "
            f"g={c.genus}, {c.space.value}"
        )
    return sum((v * c[key] for key, v in r.row.items()), Fraction(0))


def prym_null_numbers(name: str, g: int, i: int | None = None) -> PrymNullPair:
    """Intersection numbers with the even and odd Prym-null divisors.

    These are the values obtained by counting limit linear series and
    parity changes, independently of the class formulas.
    """
    _validate(name, g, i)
    if name not in R_CURVES:
        raise CurveError(f"{name} does not live on R; Prym-null numbers are defined for {', '.join(R_CURVES)}")
    if name in ("Fi", "Gi", "Hi"):
        r = 2 ** (g - 2) * (i - 1)
        a, b = 2 ** (i - 1), 2 ** (g - i - 1)
        if name == "Fi":
            return PrymNullPair((a - 1) * (2 ** (g - i) - 1) * r, a * (2 ** (g - i) - 1) * r)
        if name == "Gi":
            return PrymNullPair((2**i - 1) * (b - 1) * r, (2**i - 1) * b * r)
        return PrymNullPair((2 ** (g - 1) - a - b + 1) * r, (2 ** (g - 1) - a - b) * r)
    if name in ("F0", "G0", "H0"):
        return PrymNullPair(0, 0)
    m = mu(g)
    if name == "Y0":
        # twisting by the trivial-type root on an irreducible nodal curve always flips parity
        return PrymNullPair(0, m)
    if name == "Z0":
        k = prym_roots_on_B(g)
        return PrymNullPair(k * m, k * m)
    if name == "T0":
        return PrymNullPair(2 ** (g - 2) * (2 ** (g - 1) + 1) * m, 2 ** (g - 2) * (2 ** (g - 1) - 1) * m)
    return PrymNullPair(2 ** (g - 1) * (2 ** (g - 4) - 1), 2 ** (2 * g - 5))


def catalog(g: int) -> list[TestCurveRow]:
    """Every cataloged family at genus g, indexed ones for all valid i."""
    out = []
    for name in CURVE_NAMES:
        if name in INDEXED:
            out += [row(name, g, i) for i in range(2, g)]
        else:
            out.append(row(name, g))
    return out
