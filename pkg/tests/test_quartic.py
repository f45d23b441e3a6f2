from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from prymnull.quartic import (
    MONOMIALS,
    BinaryForm,
    PencilQuartic,
    QuarticError,
    analyse,
    bitangent_count_check,
    discriminant,
    distinct_root_count,
    extract_quadric,
    poly_gcd,
    restrict_to_tangent,
    squarefree_part,
)
from oracles import fixed_quartic_quadric, numeric_distinct, numeric_roots, sympy_restriction

SEEDS = range(20)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=7)


@st.composite
def pencils(draw):
    coeffs = {}
    for m in MONOMIALS:
        coeffs[m] = (0, 0) if m == (4, 0, 0) else (draw(rationals), draw(rationals))
    return PencilQuartic(coeffs)


def form(*coeffs):
    return BinaryForm(len(coeffs) - 1, tuple(Fraction(c) for c in coeffs))


L0 = form(1, 0)
L1 = form(0, 1)


# -- binary forms --

def test_form_arithmetic():
    f = L0 + L1
    assert (f * f).coeffs == (1, 2, 1)
    assert (f**3)(2, 1) == 27
    with pytest.raises(QuarticError):
        L0 + form(1, 0, 0)
    with pytest.raises(QuarticError):
        BinaryForm(2, (1, 2))


def test_lam1_multiplicity_and_affine_degree():
    f = form(0, 0, 3, 1)  # 3 lam0 lam1^2 + lam1^3
    assert f.lam1_multiplicity() == 2
    assert f.affine_degree() == 1
    assert f.dehomogenize() == [1, 3, 0, 0]


def test_gcd_and_squarefree():
    # (t-1)^2 (t+2)
    p = [Fraction(2), Fraction(-3), Fraction(0), Fraction(1)]
    assert poly_gcd(p, [Fraction(-1), Fraction(1)]) == [-1, 1]
    assert squarefree_part(p) == [-2, 1, 1]


# -- distinct roots --

def test_root_count_lam0_power():
    assert distinct_root_count(L0**8) == 1
    assert distinct_root_count(L1**8) == 1


def test_root_count_mixed_example():
    f = L0 * L1 * (L0 - L1) * (L0 + L1) * (L0 * L0 + L1 * L1) ** 2
    assert f.degree == 8
    assert distinct_root_count(f) == 6


def test_root_count_zero_form():
    with pytest.raises(QuarticError):
        distinct_root_count(BinaryForm.zero(8))


# -- restriction --

def test_zero_pencil():
    restr = restrict_to_tangent(PencilQuartic({}))
    assert all(f.is_zero() for f in restr.values())
    c3, c4, c5 = extract_quadric(restr)
    assert (c3.degree, c4.degree, c5.degree) == (3, 4, 5)
    assert c3.is_zero() and c4.is_zero() and c5.is_zero()


def test_basepoint_violation():
    with pytest.raises(QuarticError):
        restrict_to_tangent(PencilQuartic({(4, 0, 0): (1, 0)}))


def test_nonvanishing_low_terms_rejected():
    restr = restrict_to_tangent(PencilQuartic.random(0))
    restr[(3, 1)] = form(1, 0, 0)
    with pytest.raises(QuarticError):
        extract_quadric(restr)


def test_square_discriminant():
    delta = discriminant(BinaryForm.zero(3), L0**4, BinaryForm.zero(5))
    assert delta == L0**8
    assert distinct_root_count(delta) == 1


@settings(max_examples=40, deadline=None)
@given(pencils())
def test_low_terms_vanish_identically(p):
    restr = restrict_to_tangent(p)
    assert restr[(4, 0)].is_zero() and restr[(3, 1)].is_zero()
    assert [restr[(i, 4 - i)].degree for i in range(5)] == [5, 4, 3, 2, 1]


@pytest.mark.parametrize("seed", range(5))
def test_restriction_matches_sympy(seed):
    p = PencilQuartic.random(seed)
    assert restrict_to_tangent(p) == sympy_restriction(p)


@pytest.mark.parametrize("seed", range(5))
def test_evaluation_commutes(seed):
    import random

    p = PencilQuartic.random(seed)
    c3, c4, c5 = extract_quadric(restrict_to_tangent(p))
    delta = discriminant(c3, c4, c5)
    rng = random.Random(1000 + seed)
    for _ in range(5):
        lam = Fraction(rng.randint(-50, 50), rng.randint(1, 13))
        a, b, c = fixed_quartic_quadric(p, lam)
        assert (c3(lam), c4(lam), c5(lam)) == (a, b, c)
        assert delta(lam) == b * b - 4 * a * c


# -- seeded pencils --

def test_random_pencil_is_deterministic():
    assert PencilQuartic.random(3) == PencilQuartic.random(3)
    p = PencilQuartic.random(3)
    assert p.has_basepoint()
    assert all(-9 <= x <= 9 for pair in p.coeffs.values() for x in pair)


@pytest.mark.parametrize("seed", SEEDS)
def test_seeded_octic(seed):
    report = analyse(PencilQuartic.random(seed), seed)
    assert report.degree == 8
    assert report.degree_drop == 0
    assert report.distinct_roots == 8
    roots, resid = numeric_roots(report.discriminant)
    assert resid < 1e-9
    assert numeric_distinct(roots) == 8


def test_degree_drop_is_reported():
    # F = x0^3 x1 vanishes on its own tangent line x1 = 0, so Delta(1, 0) = 0
    base = PencilQuartic.random(4)
    coeffs = {m: (0, b) for m, (a, b) in base.coeffs.items()}
    coeffs[(3, 1, 0)] = (1, coeffs[(3, 1, 0)][1])
    report = analyse(PencilQuartic(coeffs))
    assert report.discriminant.coeffs[0] == 0
    assert report.degree == 8
    assert report.degree_drop >= 1
    assert report.to_json()["affine_degree"] == 8 - report.degree_drop
    assert 1 <= report.distinct_roots <= 8


@pytest.mark.parametrize("g,even,odd", [(5, 16, 32), (6, 96, 128), (7, 448, 512)])
def test_bitangent_examples(g, even, odd):
    from prymnull.curves import prym_null_numbers

    pn = prym_null_numbers("R", g)
    assert (pn.even, pn.odd) == (even, odd)
    assert bitangent_count_check(g)


def test_bitangent_check_detects_wrong_root_count():
    assert not bitangent_count_check(5, pencil_roots=7)
