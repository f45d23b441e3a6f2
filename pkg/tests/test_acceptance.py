"""End-to-end acceptance checks, one marked group per criterion.

A summary line per criterion is printed at the end of the pytest run.
"""

import time

import pytest

from prymnull import arf, counting
from prymnull.class_space import BasisClass, ClassVector, Space, basis, pullback_R, pullback_SPlus
from prymnull.curves import R_CURVES, catalog, pair, prym_null_numbers, row
from prymnull.known_classes import mnull_class, prym_null_even, prym_null_odd, theta_null_class
from prymnull.quartic import PencilQuartic, analyse, bitangent_count_check, extract_quadric, restrict_to_tangent
from prymnull.solver import solve_boundary_coeffs, solve_d0t, solve_lambda_d0p_d0b
from oracles import numeric_distinct, numeric_roots

GENERA = range(5, 13)
TABLE_GENERA = range(5, 11)


def _pipeline(g, parity):
    known = solve_boundary_coeffs(g, parity)
    n1 = BasisClass(Space.R, "n", 1)
    known[BasisClass(Space.R, "t", 0)] = solve_d0t(g, parity, known[n1])
    lam, d0p, d0b = solve_lambda_d0p_d0b(g, parity, known)
    known[BasisClass(Space.R, "p", 0)] = d0p
    known[BasisClass(Space.R, "b", 0)] = d0b
    coeffs = {k: -v for k, v in known.items()}
    coeffs[BasisClass(Space.R, "lambda")] = lam
    return ClassVector(g, Space.R, coeffs)


@pytest.mark.criterion(1, "class reproduction, g=5..12, exact, < 1 s")
def test_criterion_1_class_reproduction():
    start = time.perf_counter()
    solved = {(g, p): _pipeline(g, p) for g in GENERA for p in "+-"}
    elapsed = time.perf_counter() - start
    for g in GENERA:
        assert solved[g, "+"] == prym_null_even(g), g
        assert solved[g, "-"] == prym_null_odd(g), g
        for b in basis(g, Space.R):
            assert solved[g, "+"][b] == prym_null_even(g)[b]
            assert solved[g, "-"][b] == prym_null_odd(g)[b]
    assert solved[5, "+"]["lambda"] == 68
    assert solved[5, "+"]["d0_b"] == -17
    assert solved[5, "-"]["d0_t"] == -16
    assert elapsed < 1.0, f"pipeline took {elapsed:.3f}s"


@pytest.mark.criterion(2, "even + odd == pullback of the theta-null divisor on M, g=5..12")
def test_criterion_2_sum_check():
    for g in GENERA:
        assert prym_null_even(g) + prym_null_odd(g) == pullback_R(g, mnull_class(g)), g


@pytest.mark.criterion(3, "GF(2) oracle equals closed-form counts, g=1..5, eta-independent, < 10 s")
def test_criterion_3_oracle():
    start = time.perf_counter()
    tables = {g: arf.oracle_counts(g) for g in range(1, 6)}
    elapsed = time.perf_counter() - start
    for g, found in tables.items():
        closed = counting.count_table(g)
        for f in counting.CountTable.FIELDS:
            assert getattr(found, f) == getattr(closed, f), (g, f)
    assert (tables[3].s_plus, tables[3].s_minus) == (36, 28)
    assert elapsed < 10.0, f"oracle took {elapsed:.3f}s"


@pytest.mark.criterion(3, "GF(2) oracle equals closed-form counts, g=1..5, eta-independent, < 10 s")
@pytest.mark.parametrize("g", range(1, 6))
def test_criterion_3_eta_independence(g):
    table = [arf.arf_bits(g, b) for b in range(1 << (2 * g))]
    triples = set()
    for eta in range(1, 1 << (2 * g)):
        ee, oo, eo, oe = arf.twist_counts(g, eta, table)
        assert eo == oe
        triples.add((ee, oo, eo))
    assert triples == {(counting.n_plus(g), counting.n_minus(g), counting.n_pm(g))}


@pytest.mark.criterion(4, "projection formula for every R row and M class, g=5..10, coarse spin pullback")
def test_criterion_4_adjunction():
    for g in TABLE_GENERA:
        units = [ClassVector(g, Space.M, {c: 1}) for c in basis(g, Space.M)]
        for r in catalog(g):
            if r.pushforward_multiplicity is None:
                continue
            base = r.base_row()
            for u in units:
                if r.space is Space.R:
                    lhs = pair(r, pullback_R(g, u))
                else:
                    lhs = pair(r, pullback_SPlus(g, u, "coarse"))
                assert lhs == r.pushforward_multiplicity * pair(base, u), (g, r.display_name, u)


@pytest.mark.criterion(5, "class pairings equal Prym-null intersection numbers, g=5..10")
def test_criterion_5_intersections():
    for g in TABLE_GENERA:
        even, odd = prym_null_even(g), prym_null_odd(g)
        for r in catalog(g):
            if r.name not in R_CURVES:
                continue
            pn = prym_null_numbers(r.name, g, r.index)
            assert (pair(r, even), pair(r, odd)) == (pn.even, pn.odd), (g, r.display_name)
    pn = prym_null_numbers("R", 5)
    assert (pn.even, pn.odd) == (16, 32)
    pn = prym_null_numbers("Y0", 5)
    assert (pn.even, pn.odd) == (0, 68)


@pytest.mark.criterion(6, "mu = Y0n . theta-null, g=5..12")
def test_criterion_6_mu():
    for g in GENERA:
        assert pair(row("Y0n", g), theta_null_class(g)) == 2 ** (g - 3) * (2 ** (g - 2) * (g - 3) + 1)
    assert pair(row("Y0n", 5), theta_null_class(5)) == 68


@pytest.mark.criterion(7, "quartic pencil octic over 20 seeds plus bitangent count, < 5 s")
def test_criterion_7_quartic():
    start = time.perf_counter()
    for seed in range(20):
        pencil = PencilQuartic.random(seed)
        restr = restrict_to_tangent(pencil)
        assert restr[(4, 0)].is_zero() and restr[(3, 1)].is_zero(), seed
        c3, c4, c5 = extract_quadric(restr)
        assert (c3.degree, c4.degree, c5.degree) == (3, 4, 5)
        report = analyse(pencil, seed)
        assert report.degree == 8 and report.degree_drop == 0, seed
        assert report.distinct_roots == 8, seed
        roots, resid = numeric_roots(report.discriminant)
        assert resid < 1e-9, (seed, resid)
        assert numeric_distinct(roots) == 8, seed
    for g in TABLE_GENERA:
        assert bitangent_count_check(g), g
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0, f"quartic checks took {elapsed:.3f}s"
