"""Named characters of symmetric sequences: trivial, sign, Specht, uCom, Lie, Lie_d, Pois_d.

Formulas stated in hbar are rewritten in t = -hbar here, once:

* ``ch(Lie_d) = -t^(1-d) sum_n (mu_n/n) log(1 + c_n t^((d-1)n) p_n)`` with
  ``c_n = (-1)^(d + (d-1)n)``; the j-th log term sits at t-exponent
  ``(d-1)(nj-1)``.
* ``log ch(uPois_d) = (-1)^d sum_m sum_{n|m} hbar^((1-d)m/n) (mu_n/m)
  log(1 + (-1)^d hbar^((d-1)m) p_m)``, expanded monomial by monomial with
  ``hbar^a = (-1)^a t^a``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Optional, Tuple

from .bases import e_to_p, h_to_p, schur_to_p
from .partitions import Partition, divisors, make_partition, mobius
from .plethysm import series_exp
from .series import SymSeries, Truncation


def _trunc(deg_max: int, t_max: int = 8, trunc: Optional[Truncation] = None) -> Truncation:
    if trunc is not None:
        return trunc
    return Truncation(deg_max, deg_max, -8, max(8, t_max))


def ch_triv(n: int, trunc: Optional[Truncation] = None) -> SymSeries:
    return h_to_p(n, "x", trunc or _trunc(n))


def ch_sgn(n: int, trunc: Optional[Truncation] = None) -> SymSeries:
    return e_to_p(n, "x", trunc or _trunc(n))


def ch_specht(lam, trunc: Optional[Truncation] = None) -> SymSeries:
    lam = make_partition(lam)
    return schur_to_p(lam, "x", trunc or _trunc(sum(lam)))


def ch_regular(n: int, trunc: Optional[Truncation] = None) -> SymSeries:
    """Regular representation of S_n: ``p_1^n``."""
    return SymSeries({((1,) * n, 0): 1}, "x", trunc or _trunc(n))


def ch_ucom(deg_max: int, trunc: Optional[Truncation] = None) -> SymSeries:
    """``sum_{n>=0} h_n`` up to degree ``deg_max``."""
    tr = _trunc(deg_max, trunc=trunc)
    acc = SymSeries({}, "x", tr)
    for n in range(deg_max + 1):
        acc = acc + h_to_p(n, "x", tr)
    return acc


def _log_terms(deg_max: int, emit) -> Dict[Tuple[Partition, int], Fraction]:
    out: Dict[Tuple[Partition, int], Fraction] = {}
    for key, c in emit(deg_max):
        if c:
            out[key] = out.get(key, 0) + c
    return out


def ch_lie(deg_max: int, trunc: Optional[Truncation] = None) -> SymSeries:
    """Witt character ``sum_n (-mu_n/n) log(1 - p_n)``."""
    return ch_lie_d(1, deg_max, trunc)


def ch_lie_d(d: int, deg_max: int, trunc: Optional[Truncation] = None) -> SymSeries:
    """Character of the (d-1)-fold suspended Lie operad, graded by t."""
    if d < 1:
        raise ValueError("d must be >= 1")

    def emit(D):
        for n in range(1, D + 1):
            m = mobius(n)
            if not m:
                continue
            c = -1 if (d + (d - 1) * n) % 2 else 1
            for j in range(1, D // n + 1):
                coef = -Fraction(m, n) * Fraction((-1) ** (j + 1) * c ** j, j)
                yield ((n,) * j, (d - 1) * (n * j - 1)), coef

    tr = _trunc(deg_max, (d - 1) * (deg_max - 1), trunc)
    return SymSeries(_log_terms(deg_max, emit), "x", tr)


def log_ch_pois(d: int, deg_max: int, trunc: Optional[Truncation] = None) -> SymSeries:
    """Logarithm of the character of the unital d-Poisson operad."""
    if d < 1:
        raise ValueError("d must be >= 1")

    def emit(D):
        sd = (-1) ** d
        for m in range(1, D + 1):
            for n in divisors(m):
                mu = mobius(n)
                if not mu:
                    continue
                for j in range(1, D // m + 1):
                    a = (1 - d) * m // n + (d - 1) * m * j  # hbar exponent
                    coef = sd * Fraction(mu, m) * Fraction((-1) ** (j + 1), j) * sd ** j
                    yield ((m,) * j, a), coef * (-1) ** (a % 2)

    top = max((d - 1) * (deg_max - 1), 0)
    tr = _trunc(deg_max, top, trunc)
    return SymSeries(_log_terms(deg_max, emit), "x", tr)


def ch_upois(d: int, deg_max: int, trunc: Optional[Truncation] = None) -> SymSeries:
    """``exp(log ch(uPois_d))``, constant term included."""
    lg = log_ch_pois(d, deg_max, trunc)
    return SymSeries.from_bi(series_exp(lg.embed()) + 1, "x")
