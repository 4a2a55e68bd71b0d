"""Saturation, regular-representation characters, box products and the Psi regrading.

The box product is computed in contraction form: with ``Sat(f) = sum a[lam, kap]
p_lam(x) p_kap(y)`` and ``Sat(g) = sum b[kap, rho] p_kap(x) p_rho(y)``,

    f [box] g = sum_{kap != ()} z_kap * a[lam, kap] * b[kap, rho] * p_lam(x) p_rho(y).

Pairing the inner alphabets this way is what the adjoint of the regular
representation character does once the primed alphabets are set to zero.
The sum over inner arities is infinite in general; ``inner_deg`` caps it.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Tuple

from .bases import adjoint_apply
from .partitions import EMPTY, Partition, partitions_of, z_of
from .plethysm import plethystic_exp, plethystic_log
from .series import BiSymSeries, Truncation, WindowOverflow, as_bi


def saturate(fbar) -> BiSymSeries:
    """``Sat(f) = sum_{n>=1} h_n(x) o (f, 0) = Exp(f)``."""
    return plethystic_exp(as_bi(fbar))


def regular_rep_char(n: int, trunc: Optional[Truncation] = None) -> BiSymSeries:
    """``R_n = sum_{lam |- n} s_lam(x) s_lam(y) = sum_{mu |- n} p_mu(x) p_mu(y) / z_mu``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if trunc is None:
        trunc = Truncation(max(n, 6), max(n, 6))
    return BiSymSeries({(mu, mu, 0): Fraction(1, z_of(mu)) for mu in partitions_of(n)}, trunc)


def _box_trunc(a: BiSymSeries, b: BiSymSeries) -> Truncation:
    return Truncation(
        a.trunc.deg_x,
        b.trunc.deg_y,
        max(a.trunc.t_min, b.trunc.t_min),
        min(a.trunc.t_max, b.trunc.t_max),
    )


def _default_inner(f: BiSymSeries, g: BiSymSeries, inner_deg: Optional[int]) -> int:
    bound = min(f.trunc.deg_y, g.trunc.deg_x)
    return bound if inner_deg is None else min(bound, inner_deg)


def _contract(a: BiSymSeries, b: BiSymSeries, inner: int) -> BiSymSeries:
    tr = _box_trunc(a, b)
    by_kap: Dict[Partition, List[Tuple[Partition, int, Fraction]]] = {}
    for (kap, rho, k), c in b.terms.items():
        if kap and sum(kap) <= inner:
            by_kap.setdefault(kap, []).append((rho, k, c))
    out: Dict = {}
    clipped = a.clipped or b.clipped
    for (lam, kap, k1), c1 in a.terms.items():
        rows = by_kap.get(kap)
        if not rows:
            continue
        w = c1 * z_of(kap)
        for rho, k2, c2 in rows:
            key = (lam, rho, k1 + k2)
            out[key] = out.get(key, 0) + w * c2
    res = BiSymSeries({}, tr, clipped)
    res._absorb(out.items())
    return res


def box(fbar, gbar, inner_deg: Optional[int] = None) -> BiSymSeries:
    """Box product of bisymmetric functions, inner arities truncated at ``inner_deg``.

    The default inner bound is ``min(f.deg_y, g.deg_x)``: every inner arity
    that both saturations know about.
    """
    fbar, gbar = as_bi(fbar), as_bi(gbar)
    inner = _default_inner(fbar, gbar, inner_deg)
    return _contract(saturate(fbar), saturate(gbar), inner)


def box_by_adjoints(fbar, gbar, inner_deg: Optional[int] = None) -> BiSymSeries:
    """Slow reference path: apply ``sum_n R_n(x', y')^perp`` then set x' = y' = 0.

    Each product ``Sat(f)(x, y') Sat(g)(x', y)`` is split as an outer factor in
    (x, y) and an inner factor in (x', y'); the inner factor is fed through the
    adjoint machinery of :mod:`bisym.bases` and its constant term kept.
    """
    fbar, gbar = as_bi(fbar), as_bi(gbar)
    inner = _default_inner(fbar, gbar, inner_deg)
    a, b = saturate(fbar), saturate(gbar)
    itr = Truncation(inner, inner, -10 ** 6, 10 ** 6)
    R = BiSymSeries.zero(itr)
    for n in range(1, inner + 1):
        R = R + regular_rep_char(n, itr)
    tr = _box_trunc(a, b)
    res = BiSymSeries.zero(tr)
    for (lam, yp, k1), c1 in a.terms.items():
        if sum(yp) > inner:
            continue
        for (xp, rho, k2), c2 in b.terms.items():
            if sum(xp) > inner:
                continue
            primed = BiSymSeries({(xp, yp, 0): 1}, itr)
            val = adjoint_apply(R, primed).terms.get((EMPTY, EMPTY, 0), 0)
            if val:
                res = res + BiSymSeries({(lam, rho, k1 + k2): c1 * c2 * val}, tr)
    res.clipped = res.clipped or a.clipped or b.clipped
    return res


def connected_box(fbar, gbar, inner_deg: Optional[int] = None) -> BiSymSeries:
    """``L o (f [box] g, 0)``: the plethystic logarithm of the box product."""
    return plethystic_log(box(fbar, gbar, inner_deg))


def _shift(f: BiSymSeries, sgn: int) -> BiSymSeries:
    f = as_bi(f)
    out = {}
    down = False
    for (lam, mu, k), c in f.terms.items():
        s = sgn * (sum(mu) - sum(lam))
        down = down or s < 0
        out[(lam, mu, k + s)] = c
    if f.clipped and down:
        raise WindowOverflow("regrading a t-clipped series downward is not exact")
    return BiSymSeries(out, f.trunc, f.clipped)


def psi_regrade(fbar) -> BiSymSeries:
    """``p_n(x) -> t^-n p_n(x)``, ``p_n(y) -> t^n p_n(y)``."""
    return _shift(fbar, 1)


def psi_inverse(fbar) -> BiSymSeries:
    return _shift(fbar, -1)


def bidim_from_char(fbar, m: int, n: int, k: int = 0) -> Fraction:
    """Dimension of the (S_m x S_n)-piece at t-exponent k: ``m! n! [p_{1^m}(x) p_{1^n}(y)]``."""
    fbar = as_bi(fbar)
    c = fbar.coeff((1,) * m, (1,) * n, k)
    return c * factorial(m) * factorial(n)
