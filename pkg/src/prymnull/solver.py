"""Rederive the even and odd Prym-null classes from test-curve data alone.

Each test curve T gives one linear relation

    sum_c  row_T[c] * x_c  =  T . P^{+/-}

in the unknown class coefficients x_c. Coefficients are reported in the
subtracted convention of the class expansions: the class is
``lam * lambda - sum(delta_c * c)``, so ``delta_c = -x_c`` for boundary c.

Order of elimination:
  1. boundary indices i >= 1, one unknown per F_i / G_i / H_i relation,
  2. delta_0^t from Y_0,
  3. (lambda, delta_0^p, delta_0^b) from the 3x3 system of F_0, G_0, H_0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .class_space import BasisClass, ClassVector, Space, _check_genus, basis, normalize_label
from .curves import TestCurveRow, pair, prym_null_numbers, row
from .known_classes import prym_null_even, prym_null_odd, prym_null_total

PARITIES = ("+", "-")
LAMBDA = BasisClass(Space.R, "lambda")


class SolverError(ArithmeticError):
    pass


def _parity(parity: str) -> str:
    aliases = {"+": "+", "even": "+", "-": "-", "odd": "-"}
    try:
        return aliases[parity]
    except KeyError:
        raise SolverError(f"parity must be '+' or '-', got {parity!r}") from None


def _number(name: str, g: int, parity: str, i: int | None = None) -> Fraction:
    pn = prym_null_numbers(name, g, i)
    return Fraction(pn.even if parity == "+" else pn.odd)


def _sign(key: BasisClass) -> int:
    return 1 if key.kind == "lambda" else -1


# -- exact linear algebra ---------------------------------------------------

@dataclass
class LinearSystem:
    matrix: list[list[Fraction]]
    rhs: list[Fraction]
    unknowns: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.matrix = [[Fraction(x) for x in r] for r in self.matrix]
        self.rhs = [Fraction(x) for x in self.rhs]
        n = len(self.matrix)
        if any(len(r) != n for r in self.matrix) or len(self.rhs) != n:
            raise SolverError("linear system must be square with one rhs entry per row")

    def determinant(self) -> Fraction:
        return determinant(self.matrix)

    def solve(self) -> list[Fraction]:
        return gauss_solve(self.matrix, self.rhs)


def determinant(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    a = [[Fraction(x) for x in r] for r in matrix]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def gauss_solve(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction]:
    """Gauss-Jordan elimination over the rationals, pivoting on the first nonzero entry."""
    n = len(matrix)
    a = [[Fraction(x) for x in r] + [Fraction(b)] for r, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise SolverError("singular matrix")
        a[col], a[pivot] = a[pivot], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


# -- step 1: boundary indices i >= 1 ----------------------------------------

def single_unknown(curve: TestCurveRow, number: Fraction, known: dict[BasisClass, Fraction]) -> tuple[BasisClass, Fraction]:
    """Solve the relation of ``curve`` when exactly one of its entries is unknown.

    ``known`` maps basis classes to subtracted-convention coefficients.
    Returns the pinned class and its coefficient in the same convention.
    """
    rest = number
    unknown = []
    for key, entry in curve.row.items():
        if key in known:
            rest -= entry * _sign(key) * known[key]
        else:
            unknown.append((key, entry))
    if len(unknown) != 1:
        raise SolverError(f"{curve.display_name} leaves {len(unknown)} unknowns, expected one")
    key, entry = unknown[0]
    return key, rest / (entry * _sign(key))


def boundary_sources(g: int) -> dict[BasisClass, tuple[str, int]]:
    """Which F/G/H curve pins each boundary class with index >= 1.

    For i >= 2 the curve of index i itself is used. For i = 1 there are no
    F_1, G_1, H_1, so the index g-1 curves are used instead: they land on
    d1_t, d1_n and d1_p respectively after folding.
    """
    out: dict[BasisClass, tuple[str, int]] = {}
    for i in range(2, g // 2 + 1):
        for name, kind in (("Fi", "n"), ("Gi", "t"), ("Hi", "p")):
            key = normalize_label(g, kind, i)
            out.setdefault(key, (name, i))
    for name in ("Gi", "Fi", "Hi"):
        key = normalize_label(g, {"Fi": "n", "Gi": "t", "Hi": "p"}[name], g - 1)
        out[key] = (name, g - 1)
    return {b: out[b] for b in basis(g, Space.R) if b in out}


def solve_from_curve(g: int, parity: str, name: str, i: int) -> tuple[BasisClass, Fraction]:
    parity = _parity(parity)
    return single_unknown(row(name, g, i), _number(name, g, parity, i), {})


def solve_boundary_coeffs(g: int, parity: str) -> dict[BasisClass, Fraction]:
    _check_genus(g)
    parity = _parity(parity)
    out = {}
    for key, (name, i) in boundary_sources(g).items():
        pinned, value = solve_from_curve(g, parity, name, i)
        if pinned != key:
            raise SolverError(f"{name}_{i} pins {pinned.label}, expected {key.label}")
        out[key] = value
    return out


# -- step 2: delta_0^t ------------------------------------------------------

def solve_d0t(g: int, parity: str, d1n_coeff: Fraction) -> Fraction:
    parity = _parity(parity)
    key, value = single_unknown(row("Y0", g), _number("Y0", g, parity), {BasisClass(Space.R, "n", 1): Fraction(d1n_coeff)})
    assert key == BasisClass(Space.R, "t", 0)
    return value


# -- step 3: lambda, delta_0^p, delta_0^b -----------------------------------

THREE_UNKNOWNS = (LAMBDA, BasisClass(Space.R, "p", 0), BasisClass(Space.R, "b", 0))


def elliptic_tail_system(g: int, parity: str, known: dict[BasisClass, Fraction]) -> LinearSystem:
    """Relations of F_0, G_0, H_0 in the unknowns (lambda, delta_0^p, delta_0^b).

    Each relation is divided by its lambda entry; ``known`` must hold
    d0_t and the index-1 coefficients.
    """
    parity = _parity(parity)
    matrix, rhs = [], []
    for name in ("F0", "G0", "H0"):
        curve = row(name, g)
        rest = _number(name, g, parity)
        coeffs = []
        for key in THREE_UNKNOWNS:
            coeffs.append(curve.row.get(key, Fraction(0)) * _sign(key))
        for key, entry in curve.row.items():
            if key not in THREE_UNKNOWNS:
                rest -= entry * _sign(key) * known[key]
        lead = coeffs[0]
        matrix.append([c / lead for c in coeffs])
        rhs.append(rest / lead)
    return LinearSystem(matrix, rhs, [k.label for k in THREE_UNKNOWNS])


def solve_lambda_d0p_d0b(g: int, parity: str, known: dict[BasisClass, Fraction]) -> tuple[Fraction, Fraction, Fraction]:
    system = elliptic_tail_system(g, parity, known)
    if system.determinant() == 0:
        raise SolverError("elliptic-tail relations are dependent")
    lam, d0p, d0b = system.solve()
    return lam, d0p, d0b


# -- assembly ---------------------------------------------------------------

@dataclass
class SolveReport:
    genus: int
    parity: str
    solved: ClassVector
    expected: ClassVector
    provenance: dict[str, str]
    residuals: list[str]
    sum_matches_total: bool | None = None

    @property
    def verdict(self) -> bool:
        return not self.residuals

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "parity": self.parity,
            "verdict": self.verdict,
            "sum_matches_total": self.sum_matches_total,
            "coefficients": [
                {
                    "label": b.label,
                    "value": str(self.solved[b]),
                    "expected": str(self.expected[b]),
                    "source": self.provenance.get(b.label, ""),
                }
                for b in basis(self.genus, Space.R)
            ],
            "residuals": self.residuals,
        }


def solve_parity(g: int, parity: str) -> tuple[ClassVector, dict[str, str]]:
    parity = _parity(parity)
    sources = boundary_sources(g)
    known = solve_boundary_coeffs(g, parity)
    provenance = {k.label: f"{name[0]}_{i}" for k, (name, i) in sources.items()}

    d0t_key = BasisClass(Space.R, "t", 0)
    known[d0t_key] = solve_d0t(g, parity, known[BasisClass(Space.R, "n", 1)])
    provenance[d0t_key.label] = "Y0"

    lam, d0p, d0b = solve_lambda_d0p_d0b(g, parity, known)
    known[BasisClass(Space.R, "p", 0)] = d0p
    known[BasisClass(Space.R, "b", 0)] = d0b
    for key in THREE_UNKNOWNS:
        provenance[key.label] = "F0+G0+H0"

    coeffs = {key: -value for key, value in known.items()}
    coeffs[LAMBDA] = lam
    return ClassVector(g, Space.R, coeffs), provenance


def assemble_and_verify(g: int) -> tuple[SolveReport, SolveReport]:
    _check_genus(g)
    reports = []
    for parity, expected in (("+", prym_null_even(g)), ("-", prym_null_odd(g))):
        solved, provenance = solve_parity(g, parity)
        residuals = [
            f"{b.label}: solved {solved[b]} != expected {expected[b]}"
            for b in basis(g, Space.R)
            if solved[b] != expected[b]
        ]
        reports.append(SolveReport(g, parity, solved, expected, provenance, residuals))
    plus, minus = reports
    total_ok = plus.solved + minus.solved == prym_null_total(g)
    plus.sum_matches_total = minus.sum_matches_total = total_ok
    if not total_ok:
        plus.residuals.append("even + odd != pullback of M_g^null")
        minus.residuals.append("even + odd != pullback of M_g^null")
    return plus, minus

