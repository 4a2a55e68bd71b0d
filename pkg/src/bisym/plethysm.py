"""Plethysm, relative plethysm, Koike plethysm, plethystic Exp/Log and omega.

Everything is a ring morphism in the first argument determined by where the
power sums go, so each operation reduces to :func:`adams` substitutions on
the inner arguments followed by products.

Grading rule.  ``adams(f, n)`` sends ``p_m -> p_{nm}`` in both alphabets and
treats ``hbar`` (not ``t = -hbar``) as the plethystic variable:
``p_n o (hbar g) = hbar^n (p_n o g)``.  In ``t`` this reads
``t^k -> (-1)^(k(n-1)) t^(nk)``: odd-degree pieces pick up the Koszul sign.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Optional, Union

from .bases import h_to_p
from .partitions import EMPTY, Partition, mobius, sign
from .series import BiSymSeries, Key, SymSeries, Truncation, TruncationError, WindowOverflow, as_bi


class PlethysmError(ValueError):
    """Inner argument does not vanish at zero, so the composite diverges."""


def adams(f, n: int):
    """Adams operation ``f -> f o p_n`` (both alphabets at once for BiSymSeries)."""
    if n < 1:
        raise ValueError("adams index must be positive")
    if isinstance(f, SymSeries):
        return SymSeries.from_bi(adams(f.embed(), n), f.alphabet)
    if n == 1:
        return f.copy()
    tr = f.trunc
    if f.clipped and tr.t_max < 0:
        raise WindowOverflow("adams of a t-clipped series with negative t_max is not exact")
    terms = {}
    odd_shift = (n - 1) % 2
    for (lam, mu, k), c in f.terms.items():
        if sum(lam) * n > tr.deg_x or sum(mu) * n > tr.deg_y:
            continue
        key = (tuple(n * p for p in lam), tuple(n * p for p in mu), n * k)
        terms[key] = -c if (odd_shift and k % 2) else c
    return BiSymSeries(terms, tr, f.clipped)


def _shift_t(f: BiSymSeries, k: int) -> BiSymSeries:
    if k == 0:
        return f
    if f.clipped and k < 0:
        raise WindowOverflow("cannot shift a t-clipped series downward exactly")
    return BiSymSeries({(a, b, j + k): c for (a, b, j), c in f.terms.items()}, f.trunc, f.clipped)


def _check_vanishes(g: BiSymSeries, what: str) -> None:
    bad = [k for k in g.constant_terms() if k <= 0]
    if bad:
        raise PlethysmError(
            f"{what} has a constant term in t-degree {min(bad)}; it must vanish at 0 "
            "up to strictly positive hbar-degree"
        )


def _min_degree(g: BiSymSeries) -> int:
    return min((sum(a) + sum(b) for (a, b, _) in g.terms), default=10 ** 9)


def _substitute(
    fbar: BiSymSeries,
    image_x: Callable[[int], BiSymSeries],
    image_y: Callable[[int], BiSymSeries],
    trunc: Truncation,
) -> BiSymSeries:
    """Ring morphism ``p_n(x) -> image_x(n)``, ``p_n(y) -> image_y(n)``, t fixed."""
    cache_x: Dict[Partition, BiSymSeries] = {EMPTY: BiSymSeries.one(trunc)}
    cache_y: Dict[Partition, BiSymSeries] = {EMPTY: BiSymSeries.one(trunc)}

    def prod_of(lam: Partition, cache, image) -> BiSymSeries:
        if lam in cache:
            return cache[lam]
        val = prod_of(lam[1:], cache, image)
        if val:
            val = image(lam[0]) * val
        cache[lam] = val
        return val

    by_lam: Dict[Partition, list] = {}
    for (lam, mu, k), c in fbar.terms.items():
        by_lam.setdefault(lam, []).append((mu, k, c))

    acc = BiSymSeries.zero(trunc)
    for lam, rest in sorted(by_lam.items(), key=lambda kv: (sum(kv[0]), kv[0])):
        px = prod_of(lam, cache_x, image_x)
        if not px:
            continue
        inner = BiSymSeries.zero(trunc)
        for mu, k, c in rest:
            py = prod_of(mu, cache_y, image_y)
            if py:
                inner = inner + _shift_t(py, k).scale(c)
        if inner:
            acc = acc + px * inner
    acc.clipped = acc.clipped or fbar.clipped
    return acc


def _exact_trunc(fbar: BiSymSeries, trunc: Truncation, vx: int, vy: int) -> Truncation:
    """Coarsen ``trunc`` so that terms of ``fbar`` beyond its own truncation cannot matter.

    A dropped term of fbar has x-degree > deg_x (or y-degree > deg_y); its image has
    total degree at least (deg_x + 1) * vx, where vx is the least total degree
    among images of p_1(x).
    """
    bound = 10 ** 9
    if vx:
        bound = min(bound, (fbar.trunc.deg_x + 1) * vx - 1)
    if vy:
        bound = min(bound, (fbar.trunc.deg_y + 1) * vy - 1)
    return trunc.with_(deg_x=min(trunc.deg_x, bound), deg_y=min(trunc.deg_y, bound))


def _as_y(g) -> BiSymSeries:
    if g is None or (isinstance(g, (int, Fraction)) and g == 0):
        return None
    if isinstance(g, SymSeries):
        return g.embed() if g.alphabet == "y" else g.relabel("y").embed()
    if isinstance(g, BiSymSeries):
        if not g.is_y_only():
            raise ValueError("the second inner argument must only involve the y alphabet")
        return g
    raise TypeError(f"unsupported inner argument {type(g).__name__}")


def relpleth(fbar, gbar, g=None) -> BiSymSeries:
    """Relative plethysm ``fbar o (gbar, g)``.

    ``p_n(x) -> adams(gbar, n)`` and ``p_n(y) -> adams(g, n)`` placed in the
    y alphabet.  ``g`` may be ``None`` or ``0`` for the zero function.
    """
    fbar, gbar = as_bi(fbar), as_bi(gbar)
    gy = _as_y(g)
    _check_vanishes(gbar, "inner argument")
    if gy is not None:
        _check_vanishes(gy, "second inner argument")
    trunc = gbar.trunc if gy is None else gbar.trunc.meet(gy.trunc)
    trunc = trunc.with_(t_min=max(trunc.t_min, fbar.trunc.t_min), t_max=min(trunc.t_max, fbar.trunc.t_max))
    vy = _min_degree(gy) if gy is not None else 10 ** 9
    trunc = _exact_trunc(fbar, trunc, min(_min_degree(gbar), 10 ** 9), vy)
    gbar = gbar.retruncate(trunc)
    gy = gy.retruncate(trunc) if gy is not None else None
    ax: Dict[int, BiSymSeries] = {}
    ay: Dict[int, BiSymSeries] = {}

    def image_x(n):
        if n not in ax:
            ax[n] = adams(gbar, n)
        return ax[n]

    def image_y(n):
        if gy is None:
            return BiSymSeries.zero(trunc)
        if n not in ay:
            ay[n] = adams(gy, n)
        return ay[n]

    return _substitute(fbar, image_x, image_y, trunc)


def pleth(f: SymSeries, g: SymSeries) -> SymSeries:
    """One-alphabet plethysm ``f o g``; both arguments share an alphabet."""
    if isinstance(f, BiSymSeries):
        f = SymSeries.from_bi(f)
    if isinstance(g, BiSymSeries):
        g = SymSeries.from_bi(g)
    alphabet = g.alphabet
    fx = f.relabel("x") if f.alphabet != "x" else f
    gx = g.relabel("x") if g.alphabet != "x" else g
    fx_bi = fx.embed()
    if not fx_bi.is_x_only():
        raise ValueError("pleth expects single-alphabet arguments")
    res = relpleth(fx_bi, gx.embed(), None)
    out = SymSeries.from_bi(res, "x")
    return out.relabel(alphabet) if alphabet != "x" else out


def koike_pleth(fbar, gbar) -> BiSymSeries:
    """Koike plethysm: ``p_n(x) -> adams(gbar, n)``, ``p_n(y) -> adams(swap(gbar), n)``."""
    fbar, gbar = as_bi(fbar), as_bi(gbar)
    _check_vanishes(gbar, "inner argument")
    swapped = gbar.swap()
    trunc = gbar.trunc.meet(swapped.trunc)
    v = _min_degree(gbar)
    trunc = _exact_trunc(fbar, trunc, v, v)
    gbar, swapped = gbar.retruncate(trunc), swapped.retruncate(trunc)
    return _substitute(fbar, lambda n: adams(gbar, n), lambda n: adams(swapped, n), trunc)


# ---------------------------------------------------------------------------
# exp / log of series


def _max_adams(f: BiSymSeries) -> int:
    tr = f.trunc
    return max(tr.deg_x, tr.deg_y, tr.t_max, 1)


def series_exp(F: BiSymSeries) -> BiSymSeries:
    """``exp(F) - 1`` for F without terms of t-degree <= 0 at degree zero."""
    _check_vanishes(F, "exponent")
    tr = F.trunc
    if F.constant_terms():
        # slow path: powers until they vanish under truncation
        acc = BiSymSeries.zero(tr)
        power = BiSymSeries.one(tr)
        j = 0
        while True:
            j += 1
            power = (power * F).scale(Fraction(1, j))
            if not power:
                break
            acc = acc + power
        return acc
    # graded recurrence on total degree: n G_n = sum_j j F_j G_{n-j}
    by_deg: Dict[int, BiSymSeries] = {}
    for key, c in F.terms.items():
        d = sum(key[0]) + sum(key[1])
        by_deg.setdefault(d, BiSymSeries.zero(tr)).terms[key] = c
    top = tr.deg_x + tr.deg_y
    G: Dict[int, BiSymSeries] = {0: BiSymSeries.one(tr)}
    acc = BiSymSeries.zero(tr)
    for n in range(1, top + 1):
        s = BiSymSeries.zero(tr)
        for j, Fj in by_deg.items():
            if j <= n and G.get(n - j):
                s = s + (Fj * G[n - j]).scale(j)
        G[n] = s.scale(Fraction(1, n))
        acc = acc + G[n]
    acc.clipped = acc.clipped or F.clipped
    return acc


def series_log1p(U: BiSymSeries) -> BiSymSeries:
    """``log(1 + U)`` for U vanishing at zero."""
    _check_vanishes(U, "argument of log")
    acc = BiSymSeries.zero(U.trunc)
    power = BiSymSeries.one(U.trunc)
    j = 0
    while True:
        j += 1
        power = power * U
        if not power:
            break
        acc = acc + power.scale(Fraction((-1) ** (j + 1), j))
    return acc


def plethystic_exp(fbar) -> BiSymSeries:
    """``Exp(f) = exp(sum_n adams(f, n) / n) - 1 = (E - 1) o (f, 0)``."""
    fbar = as_bi(fbar)
    _check_vanishes(fbar, "argument of Exp")
    tr = fbar.trunc
    F = BiSymSeries.zero(tr)
    for n in range(1, _max_adams(fbar) + 1):
        a = adams(fbar, n)
        if a:
            F = F + a.scale(Fraction(1, n))
    return series_exp(F)


def plethystic_log(fbar) -> BiSymSeries:
    """``Log(f) = sum_k (mu(k)/k) log(1 + adams(f, k)) = L o (f, 0)``."""
    fbar = as_bi(fbar)
    _check_vanishes(fbar, "argument of Log")
    tr = fbar.trunc
    acc = BiSymSeries.zero(tr)
    for k in range(1, _max_adams(fbar) + 1):
        m = mobius(k)
        if not m:
            continue
        a = adams(fbar, k)
        if a:
            acc = acc + series_log1p(a).scale(Fraction(m, k))
    return acc


# ---------------------------------------------------------------------------
# omega involutions


def omega_x(f):
    f = as_bi(f)
    return f.map_coeffs(lambda a, b, k, c: c * sign(a))


def omega_y(f):
    f = as_bi(f)
    return f.map_coeffs(lambda a, b, k, c: c * sign(b))


def omega_xy(f):
    f = as_bi(f)
    return f.map_coeffs(lambda a, b, k, c: c * sign(a) * sign(b))


def omega(f: Union[SymSeries, BiSymSeries]):
    """omega on a one-alphabet series, or on both alphabets of a BiSymSeries."""
    if isinstance(f, SymSeries):
        return SymSeries.from_bi(omega_xy(f.embed()), f.alphabet)
    return omega_xy(f)


# ---------------------------------------------------------------------------
# E and L


def E_series(trunc: Truncation = Truncation(), alphabet: str = "x") -> SymSeries:
    """``E = sum_{r >= 0} h_r``, so that ``(E - 1) o f = Sat(f)``."""
    deg = trunc.deg_x if alphabet == "x" else trunc.deg_y
    acc = SymSeries({}, alphabet, trunc)
    for r in range(deg + 1):
        acc = acc + h_to_p(r, alphabet, trunc)
    return acc


def L_series(trunc: Truncation = Truncation(), alphabet: str = "x") -> SymSeries:
    """``L = sum_k (mu(k)/k) log(1 + p_k)``, the plethystic inverse of ``E - 1``."""
    deg = trunc.deg_x if alphabet == "x" else trunc.deg_y
    terms: Dict = {}
    for k in range(1, deg + 1):
        m = mobius(k)
        if not m:
            continue
        for j in range(1, deg // k + 1):
            key = ((k,) * j, 0)
            terms[key] = terms.get(key, 0) + Fraction(m * (-1) ** (j + 1), k * j)
    return SymSeries(terms, alphabet, trunc)
