"""Brute-force reference implementations used only by the test suite.

Polynomials here are plain dicts ``exponent tuple -> Fraction`` over the
variables ``x_1..x_r, y_1..y_s`` followed by one slot for the exponent of t.
Nothing in this module shares code with the optimized kernel beyond reading
the power-sum coefficients of its inputs.

Plethysm is evaluated definitionally: the monomials of the inner argument,
taken with multiplicity, form a new variable list; its elementary symmetric
functions come from the generating product, and power sums from Newton's
identities.  A monomial of odd t-degree behaves as an odd variable, so it
enters the generating product as ``(1 - z u)^(-g)`` instead of ``(1 + z u)^g``.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from operator import add
from typing import Dict, List, Tuple

from .series import BiSymSeries, SymSeries, as_bi

Poly = Dict[Tuple[int, ...], Fraction]


class OracleError(ValueError):
    pass


def padd(a: Poly, b: Poly, scale: Fraction = Fraction(1)) -> Poly:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + scale * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _integral(a: Poly):
    den = 1
    for c in a.values():
        den = lcm(den, c.denominator)
    return {e: int(c * den) for e, c in a.items()}, den


def pmul(a: Poly, b: Poly) -> Poly:
    # integer numerators over a common denominator keep the inner loop off Fraction
    ai, da = _integral(a)
    bi, db = _integral(b)
    out: Dict[Tuple[int, ...], int] = {}
    get = out.get
    for e1, c1 in ai.items():
        for e2, c2 in bi.items():
            e = tuple(map(add, e1, e2))
            out[e] = get(e, 0) + c1 * c2
    den = da * db
    return {e: Fraction(c, den) for e, c in out.items() if c}


def pconst(c, nvars: int) -> Poly:
    return {(0,) * nvars: Fraction(c)} if c else {}


def _power_sum_poly(n: int, idx: range, nvars: int) -> Poly:
    out: Poly = {}
    for i in idx:
        e = [0] * nvars
        e[i] = n
        out[tuple(e)] = Fraction(1)
    return out


def _evaluate(f: BiSymSeries, px, py, nvars: int, cache: dict = None) -> Poly:
    """Evaluate ``sum c t^k p_lam(x) p_mu(y)`` given callables for the power sums."""
    cache = {} if cache is None else cache
    one = pconst(1, nvars)

    def prod(lam, side, fn):
        key = (side, lam)
        if key not in cache:
            cache[key] = one if not lam else pmul(fn(lam[0]), prod(lam[1:], side, fn))
        return cache[key]

    acc: Poly = {}
    for (lam, mu, k), c in f.terms.items():
        base = pmul(prod(lam, "x", px), prod(mu, "y", py)) if mu and lam else (
            prod(lam, "x", px) if lam else prod(mu, "y", py)
        )
        shifted = {e[:-1] + (e[-1] + k,): c * v for e, v in base.items()}
        acc = padd(acc, shifted)
    return acc


def eval_finite(f, r: int, s: int = 0) -> Poly:
    """Specialize to ``x_1..x_r`` and ``y_1..y_s``; the last exponent slot is t."""
    f = as_bi(f)
    nvars = r + s + 1
    return _evaluate(
        f,
        lambda n: _power_sum_poly(n, range(r), nvars),
        lambda n: _power_sum_poly(n, range(r, r + s), nvars),
        nvars,
    )


def _binom(g: Fraction, i: int) -> Fraction:
    out = Fraction(1)
    for j in range(i):
        out = out * (g - j) / (j + 1)
    return out


def _elementaries(monos: Poly, order: int, nvars: int) -> List[Poly]:
    """e_0..e_order of the variable list given by ``monos`` (with multiplicity)."""
    E: List[Poly] = [pconst(1, nvars)] + [{} for _ in range(order)]
    for expo, g in monos.items():
        if g < 0:
            raise OracleError(f"negative monomial coefficient {g} at {expo}")
        odd = expo[-1] % 2 == 1
        # powers of the monomial z^i
        zp = [pconst(1, nvars)]
        for i in range(order):
            zp.append({tuple((i + 1) * u for u in expo): Fraction(1)})
        factor = []
        for i in range(order + 1):
            if odd:
                c = _binom(g + i - 1, i)  # (1 - z u)^(-g)
            else:
                c = _binom(g, i)  # (1 + z u)^g
            factor.append({e: c * v for e, v in zp[i].items()} if c else {})
        newE: List[Poly] = []
        for n in range(order + 1):
            acc: Poly = {}
            for i in range(n + 1):
                if factor[i] and E[n - i]:
                    acc = padd(acc, pmul(factor[i], E[n - i]))
            newE.append(acc)
        E = newE
    return E


def _newton(E: List[Poly], nvars: int) -> List[Poly]:
    """Power sums p_1..p_N from elementaries: p_n = (-1)^(n-1) n e_n + sum_i (-1)^(n-1+i) e_(n-i) p_i."""
    N = len(E) - 1
    P: List[Poly] = [{}]
    for n in range(1, N + 1):
        acc = {e: (-1) ** (n - 1) * n * c for e, c in E[n].items()}
        for i in range(1, n):
            acc = padd(acc, pmul(E[n - i], P[i]), Fraction((-1) ** (n - 1 + i)))
        P.append(acc)
    return P


def _max_part(f: BiSymSeries, which: int) -> int:
    return max((max(key[which], default=0) for key in f.terms), default=0)


_PS_CACHE: Dict[tuple, List[Poly]] = {}


def power_sums_of_substitution(g, r: int, s: int, order: int) -> List[Poly]:
    """``p_1..p_order`` of the monomial list of ``g`` evaluated at (r, s) variables."""
    g = as_bi(g)
    key = (tuple(sorted(g.terms.items())), r, s, order)
    if key not in _PS_CACHE:
        monos = eval_finite(g, r, s)
        nvars = r + s + 1
        _PS_CACHE[key] = _newton(_elementaries(monos, order, nvars), nvars)
    return _PS_CACHE[key]


def pleth_by_substitution(f, g, r: int) -> Poly:
    """Definitional plethysm of one-alphabet series at r variables (alphabet x)."""
    f, g = as_bi(f), as_bi(g)
    if not (f.is_x_only() and g.is_x_only()):
        raise OracleError("pleth_by_substitution expects x-only series")
    nvars = r + 1
    order = max(_max_part(f, 0), 1)
    P = power_sums_of_substitution(g, r, 0, order)
    return _evaluate(f, lambda n: P[n], lambda n: {}, nvars)


def relpleth_by_substitution(fbar, gbar, g, r: int, s: int) -> Poly:
    """Definitional relative plethysm: z-list from gbar, w-list from g (in y)."""
    fbar, gbar = as_bi(fbar), as_bi(gbar)
    nvars = r + s + 1
    ox = max(_max_part(fbar, 0), 1)
    oy = max(_max_part(fbar, 1), 1)
    PX = power_sums_of_substitution(gbar, r, s, ox)
    if g is None:
        PY: List[Poly] = [{} for _ in range(oy + 1)]
    else:
        gy = as_bi(g)
        if isinstance(g, SymSeries) and g.alphabet == "x":
            gy = g.relabel("y").embed()
        if not gy.is_y_only():
            raise OracleError("g must live in the y alphabet")
        PY = power_sums_of_substitution(gy, r, s, oy)
    return _evaluate(fbar, lambda n: PX[n], lambda n: PY[n], nvars)
