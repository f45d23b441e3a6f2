"""Bases of rational Picard groups and class vectors over them.

Three ambient spaces are modelled, each with a basis that depends on the
genus only:

    M   lambda, d0, d1, ..., d[g/2]
    R   lambda, d0_t, d0_p, d0_b, and di_n, di_t, di_p for 1 <= i <= g/2
        (d(g/2)_t is dropped for even g, it coincides with d(g/2)_n)
    S+  lambda, d0_n, d0_b, and di_plus, di_minus for 1 <= i <= g/2

Coefficients are exact ``Fraction`` values and stored sparsely.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

MIN_GENUS = 5

Rational = Union[int, Fraction]


class ClassSpaceError(ValueError):
    pass


class Space(str, enum.Enum):
    M = "M"
    R = "R"
    SPLUS = "S+"

    @classmethod
    def parse(cls, raw: "Space | str") -> "Space":
        if isinstance(raw, Space):
            return raw
        aliases = {"M": cls.M, "R": cls.R, "S+": cls.SPLUS, "SPlus": cls.SPLUS, "S": cls.SPLUS}
        try:
            return aliases[raw]
        except KeyError:
            raise ClassSpaceError(f"unknown space {raw!r}") from None


# sub-label order inside one boundary index
_KIND_ORDER = {"": 0, "n": 1, "t": 2, "p": 3, "b": 4, "plus": 5, "minus": 6}
_LABEL_RE = re.compile(r"^d(\d+)(?:_(n|t|p|b|plus|minus))?$")


@dataclass(frozen=True)
class BasisClass:
    space: Space
    kind: str  # "lambda", or a boundary sub-label ("" for M, n/t/p/b, plus/minus)
    index: int | None = None

    @property
    def label(self) -> str:
        if self.kind == "lambda":
            return "lambda"
        if self.kind == "":
            return f"d{self.index}"
        return f"d{self.index}_{self.kind}"

    def sort_key(self) -> tuple[int, int, int]:
        if self.kind == "lambda":
            return (0, 0, 0)
        return (1, self.index, _KIND_ORDER[self.kind])

    def __str__(self) -> str:
        return self.label

    @classmethod
    def parse(cls, space: Space | str, label: str) -> "BasisClass":
        space = Space.parse(space)
        if label == "lambda":
            return cls(space, "lambda")
        m = _LABEL_RE.match(label)
        if m is None:
            raise ClassSpaceError(f"malformed label {label!r}")
        return cls(space, m.group(2) or "", int(m.group(1)))


def _check_genus(g: int) -> None:
    if not isinstance(g, int) or g < MIN_GENUS:
        raise ClassSpaceError(f"class spaces need genus >= {MIN_GENUS}, got {g!r}")


def psi(g: int) -> int:
    """1 for even genus, 0 for odd."""
    return 1 if g % 2 == 0 else 0


def basis(g: int, space: Space | str) -> list[BasisClass]:
    _check_genus(g)
    space = Space.parse(space)
    half = g // 2
    out = [BasisClass(space, "lambda")]
    if space is Space.M:
        out += [BasisClass(space, "", i) for i in range(half + 1)]
    elif space is Space.R:
        out += [BasisClass(space, k, 0) for k in ("t", "p", "b")]
        for i in range(1, half + 1):
            kinds = ("n", "p") if 2 * i == g else ("n", "t", "p")
            out += [BasisClass(space, k, i) for k in kinds]
    else:
        out += [BasisClass(space, k, 0) for k in ("n", "b")]
        for i in range(1, half + 1):
            out += [BasisClass(space, k, i) for k in ("plus", "minus")]
    return out


def normalize_label(g: int, raw_kind: str, raw_index: int) -> BasisClass:
    """Canonical R-basis element for the raw boundary divisor ``raw_kind``/``raw_index``.

    Nontrivial-on-i and trivial-on-(g-i) name the same divisor, so indices
    above g/2 are folded down, swapping n and t.
    """
    if raw_kind not in ("n", "t", "p"):
        raise ClassSpaceError(f"raw kind must be n, t or p, got {raw_kind!r}")
    if not 1 <= raw_index <= g - 1:
        raise ClassSpaceError(f"boundary index {raw_index} outside 1..{g - 1}")
    kind, i = raw_kind, raw_index
    if 2 * i > g:
        i = g - i
        kind = {"n": "t", "t": "n", "p": "p"}[kind]
    if 2 * i == g and kind == "t":
        kind = "n"
    return BasisClass(Space.R, kind, i)


def _coerce(value: Rational | str) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True)
class ClassVector:
    genus: int
    space: Space
    coeffs: Mapping[BasisClass, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        space = Space.parse(self.space)
        object.__setattr__(self, "space", space)
        allowed = set(basis(self.genus, space))
        clean: dict[BasisClass, Fraction] = {}
        for key, value in self.coeffs.items():
            if isinstance(key, str):
                key = BasisClass.parse(space, key)
            if key not in allowed:
                raise ClassSpaceError(f"{key.label} is not in the {space.value} basis for g={self.genus}")
            value = _coerce(value)
            if value:
                clean[key] = value
        ordered = {b: clean[b] for b in basis(self.genus, space) if b in clean}
        object.__setattr__(self, "coeffs", ordered)

    @classmethod
    def zero(cls, g: int, space: Space | str) -> "ClassVector":
        return cls(g, Space.parse(space), {})

    @classmethod
    def from_labels(cls, g: int, space: Space | str, coeffs: Mapping[str, Rational]) -> "ClassVector":
        space = Space.parse(space)
        return cls(g, space, {BasisClass.parse(space, k): v for k, v in coeffs.items()})

    def __getitem__(self, key: BasisClass | str) -> Fraction:
        if isinstance(key, str):
            key = BasisClass.parse(self.space, key)
        return self.coeffs.get(key, Fraction(0))

    def __iter__(self) -> Iterator[tuple[BasisClass, Fraction]]:
        return iter(self.coeffs.items())

    def _check_compatible(self, other: "ClassVector") -> None:
        if (self.genus, self.space) != (other.genus, other.space):
            raise ClassSpaceError(
                f"cannot combine g={self.genus}/{self.space.value} with g={other.genus}/{other.space.value}"
            )

    def __add__(self, other: "ClassVector") -> "ClassVector":
        self._check_compatible(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return ClassVector(self.genus, self.space, out)

    def __sub__(self, other: "ClassVector") -> "ClassVector":
        return self + other.scale(-1)

    def __neg__(self) -> "ClassVector":
        return self.scale(-1)

    def scale(self, q: Rational) -> "ClassVector":
        q = _coerce(q)
        return ClassVector(self.genus, self.space, {k: q * v for k, v in self.coeffs.items()})

    def __rmul__(self, q: Rational) -> "ClassVector":
        return self.scale(q)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClassVector):
            return NotImplemented
        self._check_compatible(other)
        return dict(self.coeffs) == dict(other.coeffs)

    def __hash__(self) -> int:
        return hash((self.genus, self.space, tuple(self.coeffs.items())))

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "space": self.space.value,
            "coeffs": {k.label: str(v) for k, v in self.coeffs.items()},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "ClassVector":
        return cls.from_labels(data["genus"], data["space"], {k: Fraction(v) for k, v in data["coeffs"].items()})


# module-level spellings of the vector operations
def add(a: ClassVector, b: ClassVector) -> ClassVector:
    return a + b


def scale(q: Rational, a: ClassVector) -> ClassVector:
    return a.scale(q)


def eq(a: ClassVector, b: ClassVector) -> bool:
    return a == b


def _pullback_images_R(g: int) -> dict[BasisClass, dict[BasisClass, int]]:
    R = Space.R
    images = {
        BasisClass(Space.M, "lambda"): {BasisClass(R, "lambda"): 1},
        BasisClass(Space.M, "", 0): {BasisClass(R, "t", 0): 1, BasisClass(R, "p", 0): 1, BasisClass(R, "b", 0): 2},
    }
    for i in range(1, g // 2 + 1):
        kinds = ("n", "p") if 2 * i == g else ("n", "t", "p")
        images[BasisClass(Space.M, "", i)] = {BasisClass(R, k, i): 1 for k in kinds}
    return images


def _pullback_images_SPlus(g: int, convention: str) -> dict[BasisClass, dict[BasisClass, int]]:
    if convention not in ("stack", "coarse"):
        raise ClassSpaceError(f"convention must be 'stack' or 'coarse', got {convention!r}")
    S = Space.SPLUS
    # the stack carries an extra automorphism over each Delta_i, i >= 1
    mult = 2 if convention == "stack" else 1
    images = {
        BasisClass(Space.M, "lambda"): {BasisClass(S, "lambda"): 1},
        BasisClass(Space.M, "", 0): {BasisClass(S, "n", 0): 1, BasisClass(S, "b", 0): 2},
    }
    for i in range(1, g // 2 + 1):
        images[BasisClass(Space.M, "", i)] = {BasisClass(S, "plus", i): mult, BasisClass(S, "minus", i): mult}
    return images


def _apply(c: ClassVector, target: Space, images: dict[BasisClass, dict[BasisClass, int]]) -> ClassVector:
    if c.space is not Space.M:
        raise ClassSpaceError(f"pullback expects a class on M, got {c.space.value}")
    out: dict[BasisClass, Fraction] = {}
    for key, value in c.coeffs.items():
        for image, m in images[key].items():
            out[image] = out.get(image, Fraction(0)) + m * value
    return ClassVector(c.genus, target, out)


def pullback_R(g: int, c: ClassVector) -> ClassVector:
    if c.genus != g:
        raise ClassSpaceError(f"genus mismatch: {g} vs {c.genus}")
    return _apply(c, Space.R, _pullback_images_R(g))


def pullback_SPlus(g: int, c: ClassVector, convention: str = "stack") -> ClassVector:
    if c.genus != g:
        raise ClassSpaceError(f"genus mismatch: {g} vs {c.genus}")
    return _apply(c, Space.SPLUS, _pullback_images_SPlus(g, convention))


def labels(classes: Iterable[BasisClass]) -> list[str]:
    return [b.label for b in classes]
