"""Closed-form divisor classes: theta-null, M_g^null, and the Prym-null classes."""

from __future__ import annotations

from fractions import Fraction

from .class_space import BasisClass, ClassVector, Space, _check_genus, pullback_R, psi

__all__ = [
    "k_bound",
    "psi",
    "mu",
    "theta_null_class",
    "mnull_class",
    "prym_null_total",
    "prym_null_even",
    "prym_null_odd",
    "even_boundary_coeff",
    "odd_boundary_coeff",
    "CLASSES",
]


def k_bound(g: int) -> int:
    """Upper summation bound ceil(g/2) - 1: the last index with all three of n, t, p."""
    return (g + 1) // 2 - 1


def mu(g: int) -> int:
    """Nodal curves B_py in the irreducible family carrying a vanishing theta-null."""
    return 2 ** (g - 3) * (2 ** (g - 2) * (g - 3) + 1)


def theta_null_class(g: int) -> ClassVector:
    _check_genus(g)
    S = Space.SPLUS
    coeffs = {BasisClass(S, "lambda"): Fraction(1, 4), BasisClass(S, "n", 0): Fraction(-1, 16)}
    for i in range(1, g // 2 + 1):
        coeffs[BasisClass(S, "minus", i)] = Fraction(-1, 2)
    return ClassVector(g, S, coeffs)


def mnull_class(g: int) -> ClassVector:
    _check_genus(g)
    M = Space.M
    f = 2 ** (g - 3)
    coeffs = {
        BasisClass(M, "lambda"): f * (2**g + 1),
        BasisClass(M, "", 0): -f * 2 ** (g - 3),
    }
    for i in range(1, g // 2 + 1):
        coeffs[BasisClass(M, "", i)] = -f * (2**i - 1) * (2 ** (g - i) - 1)
    return ClassVector(g, M, coeffs)


def prym_null_total(g: int) -> ClassVector:
    return pullback_R(g, mnull_class(g))


# Each Prym-null class is lambda_c * lambda minus a sum of positive multiples
# of boundary classes. The helpers below return those subtracted multiples,
# already including the common 2^{g-3} factor.

def even_boundary_coeff(g: int, kind: str, i: int) -> int:
    f = 2 ** (g - 3)
    if i == 0:
        return {"t": 0, "p": 2 ** (2 * g - 7), "b": 2 ** (g - 5) * (2 ** (g - 1) + 1)}[kind]
    return f * {
        "n": (2 ** (i - 1) - 1) * (2 ** (g - i) - 1),
        "t": (2**i - 1) * (2 ** (g - i - 1) - 1),
        "p": 2 ** (g - 1) - 2 ** (i - 1) - 2 ** (g - i - 1) + 1,
    }[kind]


def odd_boundary_coeff(g: int, kind: str, i: int) -> int:
    f = 2 ** (g - 3)
    if i == 0:
        return {"t": 2 ** (2 * g - 6), "p": 2 ** (2 * g - 7), "b": 2 ** (g - 5) * (2 ** (g - 1) - 1)}[kind]
    return f * {
        "n": 2 ** (i - 1) * (2 ** (g - i) - 1),
        "t": (2**i - 1) * 2 ** (g - i - 1),
        "p": 2 ** (g - 1) - 2 ** (i - 1) - 2 ** (g - i - 1),
    }[kind]


def _prym_null(g: int, lam: int, boundary) -> ClassVector:
    _check_genus(g)
    R = Space.R
    coeffs = {BasisClass(R, "lambda"): lam}
    for kind in ("t", "p", "b"):
        coeffs[BasisClass(R, kind, 0)] = -boundary(g, kind, 0)
    # for even g the i = g/2 terms are the generic formulas with t dropped
    for i in range(1, g // 2 + 1):
        kinds = ("n", "p") if 2 * i == g else ("n", "t", "p")
        for kind in kinds:
            coeffs[BasisClass(R, kind, i)] = -boundary(g, kind, i)
    return ClassVector(g, R, coeffs)


def prym_null_even(g: int) -> ClassVector:
    return _prym_null(g, 2 ** (g - 3) * (2 ** (g - 1) + 1), even_boundary_coeff)


def prym_null_odd(g: int) -> ClassVector:
    return _prym_null(g, 2 ** (2 * g - 4), odd_boundary_coeff)


CLASSES = {
    "total": prym_null_total,
    "even": prym_null_even,
    "odd": prym_null_odd,
    "thetanull": theta_null_class,
    "mnull": mnull_class,
}
