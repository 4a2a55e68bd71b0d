"""Random series generators shared by the property tests."""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from hypothesis import strategies as st

from bisym.partitions import partitions_up_to
from bisym.series import BiSymSeries, SymSeries, Truncation


def keys_up_to(dx: int, dy: int, positive: bool = True):
    out = []
    for lam in partitions_up_to(dx):
        for mu in partitions_up_to(dy):
            if positive and not lam and not mu:
                continue
            out.append((lam, mu))
    return out


def random_bi(
    rng: random.Random,
    dx: int,
    dy: int,
    trunc: Truncation,
    n_terms: int = 4,
    ts: Sequence[int] = (0,),
    positive: bool = True,
) -> BiSymSeries:
    """Random bisymmetric polynomial; ``positive`` keeps it vanishing at zero."""
    keys = keys_up_to(dx, dy, positive)
    terms = {}
    for _ in range(n_terms):
        lam, mu = rng.choice(keys)
        c = Fraction(rng.randint(-3, 3), rng.choice((1, 1, 2, 3)))
        terms[(lam, mu, rng.choice(ts))] = c
    return BiSymSeries(terms, trunc)


def random_sym(rng: random.Random, d: int, alphabet: str, trunc: Truncation, n_terms: int = 3, ts=(0,)) -> SymSeries:
    keys = [lam for lam in partitions_up_to(d) if lam]
    terms = {}
    for _ in range(n_terms):
        terms[(rng.choice(keys), rng.choice(ts))] = Fraction(rng.randint(-3, 3), rng.choice((1, 2)))
    return SymSeries(terms, alphabet, trunc)


seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)


def with_linear_part(rng: random.Random, f: BiSymSeries) -> BiSymSeries:
    """Add a random degree-1 part so plethysms into ``f`` survive degree truncation."""
    lin = BiSymSeries(
        {
            ((1,), (), rng.choice((0, 1))): Fraction(rng.randint(1, 3)),
            ((), (1,), 0): Fraction(rng.randint(-2, 2)),
        },
        f.trunc,
    )
    return f + lin
