import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from bisym.bases import e_to_p, h_to_p, schur_expansion, schur_to_p
from bisym.oracle import eval_finite, pleth_by_substitution
from bisym.partitions import partitions_of
from bisym.plethysm import (
    E_series,
    L_series,
    PlethysmError,
    adams,
    koike_pleth,
    omega,
    omega_x,
    omega_y,
    pleth,
    plethystic_exp,
    plethystic_log,
    relpleth,
)
from bisym.series import BiSymSeries, SymSeries, Truncation
from helpers import random_bi, random_sym, seeds, with_linear_part

T = Truncation(8, 8, -12, 12)


def px(n):
    return BiSymSeries.p(n, "x", T)


def py(n):
    return BiSymSeries.p(n, "y", T)


def sp(n, alphabet="x"):
    return SymSeries.p(n, alphabet, T)


# adams ---------------------------------------------------------------------


def test_adams_examples():
    assert adams(px(3), 2) == px(6)
    assert adams(h_to_p(2, "x", T), 2) == SymSeries({((2, 2), 0): Fraction(1, 2), ((4,), 0): Fraction(1, 2)}, "x", T)
    assert adams(BiSymSeries.monomial((), (1,), 1, trunc=T), 3) == BiSymSeries.monomial((), (3,), 3, trunc=T)


def test_adams_carries_koszul_sign_on_odd_t_degree():
    # p_2 o (hbar p_1) = hbar^2 p_2, and hbar = -t
    t_p1 = BiSymSeries.monomial((1,), (), 1, trunc=T)
    assert adams(t_p1, 2) == BiSymSeries.monomial((2,), (), 2, c=-1, trunc=T)
    assert adams(BiSymSeries.monomial((1,), (), 2, trunc=T), 2) == BiSymSeries.monomial((2,), (), 4, trunc=T)


def test_adams_drops_keys_beyond_truncation():
    assert adams(BiSymSeries.p(3, "x", Truncation(5, 5)), 2).is_zero()


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_adams_composes(seed):
    rng = random.Random(seed)
    tr = Truncation(12, 12, -40, 40)
    f = random_bi(rng, 3, 3, tr, ts=(-1, 0, 1, 3))
    for m, n in [(2, 3), (2, 2), (3, 1)]:
        assert adams(adams(f, m), n) == adams(f, m * n)


# pleth ---------------------------------------------------------------------


def test_pleth_examples():
    h2 = h_to_p(2, "x", T)
    assert pleth(sp(2), h2) == SymSeries({((2, 2), 0): Fraction(1, 2), ((4,), 0): Fraction(1, 2)}, "x", T)
    assert schur_expansion(pleth(h2, h2)) == {((4,), 0): 1, ((2, 2), 0): 1}


@pytest.mark.parametrize("f", [(3,), (2, 1), (1, 1, 1), (2, 2)])
def test_pleth_identity(f):
    s = schur_to_p(f, "x", T)
    assert pleth(s, sp(1)) == s
    assert pleth(sp(1), s) == s


def test_pleth_in_y_alphabet():
    assert pleth(sp(2, "y"), h_to_p(2, "y", T)) == adams(h_to_p(2, "y", T), 2)


def test_pleth_requires_vanishing_inner_argument():
    with pytest.raises(PlethysmError):
        pleth(sp(2), SymSeries.scalar(1, "x", T))
    with pytest.raises(PlethysmError):
        pleth(sp(2), SymSeries({((), -1): 1}, "x", T))
    # positive hbar-degree constants are allowed
    assert pleth(sp(2), SymSeries({((), 1): 1}, "x", T)) == SymSeries({((), 2): -1}, "x", T)


@pytest.mark.parametrize("g_t", [1, 2, 3])
def test_pleth_agrees_with_oracle_on_graded_inner_argument(g_t):
    g = SymSeries({((1,), g_t): 1, ((2,), 0): 1}, "x", T)
    for f in [h_to_p(2, "x", T), e_to_p(3, "x", T), schur_to_p((2, 1), "x", T)]:
        assert eval_finite(pleth(f, g), 4) == pleth_by_substitution(f, g, 4)


def test_pleth_extends_t_linearly_in_first_argument():
    # first arguments mixing t-degrees are handled term by term
    f = SymSeries({((2,), 1): 1, ((2,), 0): 3}, "x", T)
    g = h_to_p(2, "x", T)
    assert pleth(f, g) == pleth(SymSeries({((2,), 0): 1}, "x", T), g) * SymSeries({((), 1): 1}, "x", T) + pleth(
        SymSeries({((2,), 0): 3}, "x", T), g
    )


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_pleth_truncation_coherence(seed):
    rng = random.Random(seed)
    fine, coarse = Truncation(7, 7, -20, 20), Truncation(4, 4, -20, 20)
    f = random_sym(rng, 4, "x", fine)
    g = random_sym(rng, 3, "x", fine, ts=(0, 1))
    lhs = SymSeries.from_bi(pleth(f, g).embed().retruncate(coarse), "x")
    rhs = pleth(SymSeries.from_bi(f.embed().retruncate(coarse), "x"), SymSeries.from_bi(g.embed().retruncate(coarse), "x"))
    assert lhs == rhs


# omega ---------------------------------------------------------------------


def test_omega_examples():
    assert omega(h_to_p(2, "x", T)) == e_to_p(2, "x", T)
    assert omega(schur_to_p((2, 1), "x", T)) == schur_to_p((2, 1), "x", T)
    f = BiSymSeries.monomial((3,), (2,), trunc=T)
    assert omega_x(f) == f
    assert omega_y(f) == -f


@pytest.mark.parametrize("lam", [lam for n in range(1, 7) for lam in partitions_of(n)])
def test_omega_transposes_schur(lam):
    from bisym.partitions import transpose

    assert omega(schur_to_p(lam, "x", T)) == schur_to_p(transpose(lam), "x", T)


def _homogeneous(rng, d):
    parts = partitions_of(d)
    return SymSeries({(rng.choice(parts), 0): Fraction(rng.randint(1, 3)) for _ in range(2)}, "x", T)


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_omega_plethysm_sign_rule(seed):
    rng = random.Random(seed)
    f = _homogeneous(rng, rng.randint(1, 3))
    dg = rng.randint(1, 2)
    g = _homogeneous(rng, dg)
    lhs = omega(pleth(f, g))
    rhs = pleth(f, omega(g)) if dg % 2 == 0 else pleth(omega(f), omega(g))
    assert lhs == rhs


# relative and Koike plethysm ----------------------------------------------


@pytest.mark.parametrize("k", range(1, 5))
@pytest.mark.parametrize("l", range(1, 5))
def test_relpleth_power_sum_identities(k, l):
    tr = Truncation(16, 16)
    gbar = BiSymSeries.monomial((1,), (1,), trunc=tr) + BiSymSeries.p(2, "x", tr)
    assert relpleth(BiSymSeries.p(k, "y", tr), gbar, SymSeries.p(l, "y", tr)) == BiSymSeries.p(k * l, "y", tr)
    assert relpleth(BiSymSeries.p(k, "x", tr), BiSymSeries.p(l, "x", tr), SymSeries.p(1, "y", tr)) == BiSymSeries.p(k * l, "x", tr)
    assert relpleth(BiSymSeries.p(k, "x", tr), BiSymSeries.p(l, "y", tr), SymSeries.p(1, "y", tr)) == BiSymSeries.p(k * l, "y", tr)


def test_relpleth_zero_second_argument():
    assert relpleth(py(2), px(1), None).is_zero()
    assert relpleth(px(2) * py(1), px(1), 0).is_zero()


def test_relpleth_precondition():
    with pytest.raises(PlethysmError):
        relpleth(px(1), BiSymSeries.scalar(1, T), None)
    with pytest.raises(PlethysmError):
        relpleth(py(1), px(1), SymSeries.scalar(2, "y", T))


def test_relpleth_rejects_x_in_second_argument():
    with pytest.raises(ValueError):
        relpleth(py(1), px(1), px(1))


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_relpleth_first_argument_is_a_ring_morphism(seed):
    rng = random.Random(seed)
    tr = Truncation(6, 6, -20, 20)
    f1, f2 = random_bi(rng, 2, 2, tr, ts=(-1, 0, 1)), random_bi(rng, 2, 2, tr, ts=(0, 1))
    gbar = with_linear_part(rng, random_bi(rng, 2, 2, tr, ts=(0, 1)))
    g = random_sym(rng, 2, "y", tr, ts=(0, 1))
    assert relpleth(f1 * f2, gbar, g) == relpleth(f1, gbar, g) * relpleth(f2, gbar, g)
    assert relpleth(f1 + f2, gbar, g) == relpleth(f1, gbar, g) + relpleth(f2, gbar, g)


def test_koike_examples():
    assert koike_pleth(px(2), px(1) * py(1)) == px(2) * py(2)
    assert koike_pleth(py(1), px(2) * py(1)) == py(2) * px(1)


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_koike_on_x_only_is_relative_plethysm(seed):
    rng = random.Random(seed)
    tr = Truncation(4, 4, -20, 20)
    f = random_sym(rng, 4, "x", tr).embed()
    gbar = with_linear_part(rng, random_bi(rng, 2, 2, tr, ts=(0, 1)))
    assert koike_pleth(f, gbar) == relpleth(f, gbar, None)


# Exp / Log / E / L ------------------------------------------------------


def test_exp_of_p1_is_complete_homogeneous_sum():
    expected = sum((h_to_p(n, "x", T).embed() for n in range(2, 9)), h_to_p(1, "x", T).embed())
    assert plethystic_exp(px(1)) == expected


def test_exp_of_zero():
    assert plethystic_exp(BiSymSeries.zero(T)).is_zero()
    assert plethystic_log(BiSymSeries.zero(T)).is_zero()


def test_exp_precondition():
    with pytest.raises(PlethysmError):
        plethystic_exp(BiSymSeries.scalar(1, T))


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_log_inverts_exp(seed):
    rng = random.Random(seed)
    tr = Truncation(5, 5, -30, 30)
    f = random_bi(rng, 4, 4, tr, ts=(0, 1, 2))
    assert plethystic_log(plethystic_exp(f)) == f
    assert plethystic_exp(plethystic_log(f)) == f


def test_E_and_L_are_mutually_inverse():
    e1 = E_series(T) - 1
    L = L_series(T)
    assert pleth(e1, L) == sp(1)
    assert pleth(L, e1) == sp(1)


def test_E_is_exp_of_power_sums():
    assert E_series(T) - 1 == plethystic_exp(px(1))
