"""JSON and LaTeX renderers for class vectors."""

from __future__ import annotations

import json
from fractions import Fraction

from .class_space import BasisClass, ClassVector

LATEX_NAMES = {
    "total": r"\varrho_{\rm null}",
    "even": r"\varrho^{+}_{\rm null}",
    "odd": r"\varrho^{-}_{\rm null}",
    "mnull": r"\overline{\mu}_{g}^{\rm null}",
    "thetanull": r"\overline{\vartheta}_{\rm null}",
}

# classes displayed with the 2^{g-3} factor pulled out
FACTORED = ("total", "even", "odd", "mnull")


def dumps(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)


def latex_symbol(b: BasisClass) -> str:
    if b.kind == "lambda":
        return r"\lambda"
    base = rf"\delta_{{{b.index}}}"
    if b.kind == "":
        return base
    if b.kind in ("plus", "minus"):
        return base + ("^{+}" if b.kind == "plus" else "^{-}")
    return base + rf"^{{\rm {b.kind}}}"


def latex_number(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return rf"\frac{{{q.numerator}}}{{{q.denominator}}}"


def latex_terms(c: ClassVector, factor: Fraction = Fraction(1)) -> str:
    parts = []
    for b, v in c:
        v = v / factor
        sign = "-" if v < 0 else "+"
        mag = abs(v)
        coeff = "" if mag == 1 else latex_number(mag) + r"\,"
        parts.append((sign, coeff + latex_symbol(b)))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, term in parts[1:]:
        out += f" {sign} {term}"
    return out


def to_latex(which: str, c: ClassVector) -> str:
    name = LATEX_NAMES.get(which, which)
    if which in FACTORED:
        e = c.genus - 3
        body = latex_terms(c, Fraction(2**e))
        return rf"{name} = 2^{{{e}}}\Big({body}\Big)"
    return rf"{name} = {latex_terms(c)}"
