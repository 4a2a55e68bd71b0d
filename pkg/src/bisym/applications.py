"""Characters of stable twisted cohomology props and their Schur-pair decompositions.

Pipeline: ``ch(H) = omega_x omega_y Psi (1 + Sat(ch Q))``.  The x alphabet
counts outputs (arity q) and y counts inputs (arity p); after Psi a cell of
bidegree (q, p) sits at t-exponent ``p - q``, which is the cohomological
degree d.  The coefficient of ``t^d = (-hbar)^d`` is the multiplicity.

Two saturation strategies are used:

* Q and its sub-prop Q~ contain ``h_1(x) h_1(y)``, of weight ``p - q = 0``,
  so a fixed degree d has infinitely many cells.  Saturation is truncated
  in arity (q_max, p_max) and the weight-d cells are read off.
* Every generator of the non-unital Q' has weight >= 1 and x-degree at most
  its weight, so the weight-d part of Sat(Q') is finite and lives in
  bidegrees (q, q + d) with q <= d.  It is computed by the exponential
  recurrence graded by weight, never touching higher weights.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from .bases import DecompositionReport, ReportRow, _expand_cell, h_to_p, split_cells
from .plethysm import adams, omega_xy, plethystic_exp
from .propcalc import psi_regrade
from .series import BiSymSeries, Truncation

VARIANTS = ("Q", "Qtilde", "Qprime")
_ALIASES = {"q": "Q", "full": "Q", "qtilde": "Qtilde", "subprop": "Qtilde", "qprime": "Qprime", "nonunital": "Qprime"}


class PipelineError(RuntimeError):
    """A decomposition that should be a genuine representation came out virtual."""


def canonical_variant(name: str) -> str:
    if name in VARIANTS:
        return name
    try:
        return _ALIASES[name.lower()]
    except KeyError:
        raise ValueError(f"unknown variant {name!r}; expected one of {', '.join(VARIANTS)}") from None


@dataclass(frozen=True)
class VariantSpec:
    """Which generator, which cohomological degree, which arity box.

    ``q_max``/``p_max`` default to the smallest box holding every cell of
    degree d for Q' and to ``p_max = 4`` (with ``q_max = p_max``) otherwise.
    """

    variant: str = "Q"
    d: int = 0
    q_max: Optional[int] = None
    p_max: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "variant", canonical_variant(self.variant))
        if self.d < 0:
            raise ValueError("degree d must be nonnegative")
        if self.q_max is not None and self.q_max < 0 or self.p_max is not None and self.p_max < 0:
            raise ValueError("arity bounds must be nonnegative")

    @property
    def bounds(self) -> Tuple[int, int]:
        if self.variant == "Qprime":
            q = self.d if self.q_max is None else self.q_max
            p = 2 * self.d if self.p_max is None else self.p_max
            return q, p
        p = 4 if self.p_max is None else self.p_max
        q = p if self.q_max is None else self.q_max
        return q, p

    @property
    def trunc(self) -> Truncation:
        q, p = self.bounds
        return Truncation(q, p, -q, p)


def ch_generator(variant: str, trunc: Truncation) -> BiSymSeries:
    """Character of the generating bimodule (ungraded, x = outputs, y = inputs)."""
    variant = canonical_variant(variant)
    acc = BiSymSeries.zero(trunc)
    h1x = h_to_p(1, "x", trunc).embed()
    for p in range(1, trunc.deg_y + 1):
        hp = h_to_p(p, "y", trunc).embed()
        if variant in ("Q", "Qprime"):
            acc = acc + hp
        if variant == "Q" or variant == "Qtilde" or (variant == "Qprime" and p >= 2):
            acc = acc + hp * h1x
    return acc


def _weight(key) -> int:
    lam, mu, _ = key
    return sum(mu) - sum(lam)


def _split_by_weight(f: BiSymSeries) -> Dict[int, BiSymSeries]:
    out: Dict[int, Dict] = {}
    for key, c in f.terms.items():
        out.setdefault(_weight(key), {})[key] = c
    return {w: BiSymSeries._raw(t, f.trunc, f.clipped) for w, t in out.items()}


def saturate_by_weight(gen: BiSymSeries, w_max: int) -> Dict[int, BiSymSeries]:
    """Weight-graded pieces ``G_w`` of ``exp(sum_n adams(gen, n)/n)`` for w <= w_max.

    Requires every term of ``gen`` to have weight ``|mu| - |lam| >= 1``.
    """
    if any(_weight(k) < 1 for k in gen.terms):
        raise ValueError("weight-graded saturation needs generators of positive weight")
    tr = gen.trunc
    F = BiSymSeries.zero(tr)
    for n in range(1, w_max + 1):
        F = F + adams(gen, n).scale(Fraction(1, n))
    Fw = {w: piece for w, piece in _split_by_weight(F).items() if w <= w_max}
    G: Dict[int, BiSymSeries] = {0: BiSymSeries.one(tr)}
    for w in range(1, w_max + 1):
        s = BiSymSeries.zero(tr)
        for j, Fj in Fw.items():
            if j <= w and G[w - j]:
                s = s + (Fj * G[w - j]).scale(j)
        G[w] = s.scale(Fraction(1, w))
    return G


def _saturated_weight_part(spec: VariantSpec) -> BiSymSeries:
    """Weight-d part of ``1 + Sat(ch Q)`` inside the arity box of ``spec``."""
    tr = spec.trunc
    gen = ch_generator(spec.variant, tr)
    if spec.variant == "Qprime":
        return saturate_by_weight(gen, spec.d)[spec.d]
    sat = plethystic_exp(gen) + 1
    return sat.filter(lambda a, b, k: sum(b) - sum(a) == spec.d)


def ch_H(spec: VariantSpec) -> BiSymSeries:
    """``omega_x omega_y Psi`` of the saturated generator, restricted to degree d."""
    part = _saturated_weight_part(spec)
    return omega_xy(psi_regrade(part)).t_part(spec.d)


def _expand(args):
    (m, n, k), cell = args
    return [((lam, mu), k, c) for (lam, mu), c in _expand_cell(cell, m, n).items()]


def expand_cells(f: BiSymSeries, threads: int = 1) -> DecompositionReport:
    """Schur-pair expansion cell by cell, optionally in a process pool."""
    jobs = sorted(split_cells(f).items())
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_expand, jobs))
    else:
        results = [_expand(j) for j in jobs]
    rows = [ReportRow(lam, mu, k, c) for res in results for (lam, mu), k, c in res]
    return DecompositionReport(rows)


def _check_genuine(report: DecompositionReport, what: str) -> DecompositionReport:
    for r in report:
        if r.mult.denominator != 1 or r.mult < 0:
            raise PipelineError(
                f"{what}: multiplicity {r.mult} of ({list(r.x_part)}, {list(r.y_part)}) "
                f"in degree {r.hbar_deg} is not a nonnegative integer"
            )
    return report


def decomposition_report(
    variant: str = "Q",
    d: int = 0,
    q_max: Optional[int] = None,
    p_max: Optional[int] = None,
    threads: int = 1,
) -> DecompositionReport:
    """Schur-pair decomposition of the degree-d piece, asserted to be genuine."""
    spec = VariantSpec(variant, d, q_max, p_max)
    chi = ch_H(spec)
    bad = [key for key in chi.terms if _weight(key) != d]
    if bad:
        raise PipelineError(f"cell-vanishing violated at {bad[0]}")
    return _check_genuine(expand_cells(chi, threads), f"{spec.variant} d={d}")


def albanese_reports(d_max: int, threads: int = 1) -> Dict[int, DecompositionReport]:
    """Reports for Q' in every degree 1..d_max from a single weight-graded saturation."""
    if d_max < 1:
        raise ValueError("d_max must be >= 1")
    tr = Truncation(d_max, 2 * d_max, -d_max, 2 * d_max)
    G = saturate_by_weight(ch_generator("Qprime", tr), d_max)
    out = {}
    for d in range(1, d_max + 1):
        chi = omega_xy(psi_regrade(G[d])).t_part(d)
        out[d] = _check_genuine(expand_cells(chi, threads), f"Qprime d={d}")
    return out


def albanese_counts(d_max: int, threads: int = 1) -> List[Tuple[int, int, int]]:
    """Rows ``(d, number of irreducibles, sum of multiplicities)`` for d = 1..d_max."""
    reports = albanese_reports(d_max, threads)
    return [(d, len(rep), int(rep.total_multiplicity())) for d, rep in sorted(reports.items())]
