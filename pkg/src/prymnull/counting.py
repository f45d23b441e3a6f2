"""Closed-form counts of theta characteristics, Prym roots and boundary fibers.

Everything returns Python ints, so there is no overflow ceiling in g.
"""

from __future__ import annotations

import re
from dataclasses import asdict, dataclass


class CountingError(ValueError):
    pass


@dataclass(frozen=True)
class CountTable:
    genus: int
    s_plus: int
    s_minus: int
    prym_roots: int
    n_plus: int
    n_minus: int
    n_pm: int

    FIELDS = ("s_plus", "s_minus", "prym_roots", "n_plus", "n_minus", "n_pm")

    def to_json(self) -> dict:
        return asdict(self)


def _check(g: int) -> None:
    if not isinstance(g, int) or g < 1:
        raise CountingError(f"genus must be a positive integer, got {g!r}")


def s_plus(g: int) -> int:
    _check(g)
    return 2 ** (g - 1) * (2**g + 1)


def s_minus(g: int) -> int:
    _check(g)
    return 2 ** (g - 1) * (2**g - 1)


def prym_roots(g: int) -> int:
    _check(g)
    return 2 ** (2 * g) - 1


def n_plus(g: int) -> int:
    """Even theta characteristics that stay even after twisting by a fixed Prym root."""
    _check(g)
    return 2 ** (g - 1) * (2 ** (g - 1) + 1)


def n_minus(g: int) -> int:
    _check(g)
    return 2 ** (g - 1) * (2 ** (g - 1) - 1)


def n_pm(g: int) -> int:
    _check(g)
    return 2 ** (2 * g - 2)


def count_table(g: int) -> CountTable:
    return CountTable(g, s_plus(g), s_minus(g), prym_roots(g), n_plus(g), n_minus(g), n_pm(g))


_R_LABEL = re.compile(r"^d(\d+)_(n|t|p|b)$")


def boundary_degree_R(g: int, label: str) -> int:
    """deg(Delta^x_i | Delta_i) for the forgetful map from Prym curves.

    ``label`` is a raw label such as ``d0_b`` or ``d3_t``; indices run over
    1..g-1 unfolded, so ``d{i}_t`` and ``d{g-i}_n`` give the same value.
    """
    _check(g)
    m = _R_LABEL.match(label)
    if m is None:
        raise CountingError(f"unknown R boundary label {label!r}")
    i, kind = int(m.group(1)), m.group(2)
    if i == 0:
        degrees = {"t": 1, "p": 2 * (2 ** (2 * (g - 1)) - 1), "b": 2 ** (2 * (g - 1))}
        if kind not in degrees:
            raise CountingError(f"no component {label!r} over Delta_0")
        return degrees[kind]
    if not 1 <= i <= g - 1 or kind == "b":
        raise CountingError(f"no component {label!r} for g={g}")
    on_i, on_rest = 2 ** (2 * i) - 1, 2 ** (2 * (g - i)) - 1
    return {"n": on_i, "t": on_rest, "p": on_i * on_rest}[kind]


def boundary_degree_S(g: int, i: int, kind: str) -> int:
    """deg(Delta^x_i | Delta_i) for even spin curves over the stack.

    ``kind`` is ``n`` or ``b`` when i = 0, ``plus`` or ``minus`` otherwise.
    """
    _check(g)
    if i == 0:
        if kind == "n":
            return 2 ** (2 * g - 2)
        if kind == "b":
            if g < 2:
                raise CountingError("deg(Delta_0^b | Delta_0) is not integral for g = 1")
            return 2 ** (g - 2) * (2 ** (g - 1) + 1)
        raise CountingError(f"no component d0_{kind} over Delta_0")
    if not 1 <= i <= g // 2:
        raise CountingError(f"spin boundary index {i} outside 1..{g // 2}")
    if kind == "plus":
        return 2 ** (g - 1) * (2**i + 1) * (2 ** (g - i) + 1)
    if kind == "minus":
        return 2 ** (g - 1) * (2**i - 1) * (2 ** (g - i) - 1)
    raise CountingError(f"unknown spin sub-label {kind!r}")


def boundary_degrees(g: int) -> dict:
    """All boundary fiber degrees at genus g, keyed by raw label."""
    out_r = {f"d0_{k}": boundary_degree_R(g, f"d0_{k}") for k in ("t", "p", "b")}
    for i in range(1, g):
        for k in ("n", "t", "p"):
            out_r[f"d{i}_{k}"] = boundary_degree_R(g, f"d{i}_{k}")
    out_s = {"d0_n": boundary_degree_S(g, 0, "n")}
    if g >= 2:
        out_s["d0_b"] = boundary_degree_S(g, 0, "b")
    for i in range(1, g // 2 + 1):
        for k in ("plus", "minus"):
            out_s[f"d{i}_{k}"] = boundary_degree_S(g, i, k)
    return {"R": out_r, "S+": out_s}
