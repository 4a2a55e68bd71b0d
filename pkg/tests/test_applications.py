import csv
import json
from pathlib import Path

import pytest

from bisym.applications import (
    PipelineError,
    _check_genuine,
    VariantSpec,
    albanese_counts,
    albanese_reports,
    canonical_variant,
    ch_generator,
    ch_H,
    decomposition_report,
    expand_cells,
    saturate_by_weight,
)
from bisym.bases import DecompositionReport, h_to_p
from bisym.partitions import partitions_up_to
from bisym.plethysm import plethystic_exp
from bisym.series import BiSymSeries, Truncation

GOLDEN = Path(__file__).parent / "golden" / "v1"


def load(name):
    return DecompositionReport.from_json(json.loads((GOLDEN / name).read_text()))


def h(n, a, tr):
    return h_to_p(n, a, tr).embed()


# generators ---------------------------------------------------------------------


def test_generator_Q_small_box():
    tr = Truncation(1, 2)
    expected = h(1, "y", tr) + h(2, "y", tr) + h(1, "y", tr) * h(1, "x", tr) + h(2, "y", tr) * h(1, "x", tr)
    assert ch_generator("Q", tr) == expected


def test_generator_Qtilde_has_no_output_free_terms():
    g = ch_generator("Qtilde", Truncation(3, 4))
    assert g.filter(lambda a, b, k: not a).is_zero()


def test_generator_Qprime_minus_Qtilde():
    tr = Truncation(2, 4)
    diff = ch_generator("Qprime", tr) - ch_generator("Qtilde", tr)
    expected = sum((h(p, "y", tr) for p in range(1, 5)), BiSymSeries.zero(tr)) - h(1, "y", tr) * h(1, "x", tr)
    assert diff == expected


@pytest.mark.parametrize("name,canon", [("Q", "Q"), ("qtilde", "Qtilde"), ("nonunital", "Qprime"), ("full", "Q")])
def test_variant_aliases(name, canon):
    assert canonical_variant(name) == canon


def test_variant_spec_validation():
    with pytest.raises(ValueError):
        VariantSpec("Q", -1)
    with pytest.raises(ValueError):
        VariantSpec("bogus", 1)
    assert VariantSpec("Q", 2).bounds == (4, 4)
    assert VariantSpec("Qprime", 3).bounds == (3, 6)


# weight-graded saturation --------------------------------------------------------


def test_weight_graded_saturation_agrees_with_full_exp():
    tr = Truncation(3, 6, -3, 6)
    gen = ch_generator("Qprime", tr)
    G = saturate_by_weight(gen, 3)
    full = plethystic_exp(gen)
    for w in (1, 2, 3):
        assert G[w] == full.filter(lambda a, b, k: sum(b) - sum(a) == w)


def test_weight_graded_saturation_needs_positive_weight():
    with pytest.raises(ValueError):
        saturate_by_weight(ch_generator("Q", Truncation(2, 2)), 2)


# pipeline examples ----------------------------------------------------------------


def test_Q_degree_zero_is_diagonal():
    rep = decomposition_report("Q", 0)
    lams = {r.x_part for r in rep}
    assert all(r.x_part == r.y_part and r.mult == 1 for r in rep)
    assert lams == set(partitions_up_to(4))


def test_Q_degree_two_anchor():
    assert decomposition_report("Q", 2).as_dict()[((2,), (2, 1, 1), 2)] == 6


def test_Q_degree_one_anchors():
    d = decomposition_report("Q", 1).as_dict()
    assert d[((3,), (4,), 1)] == 1
    assert d[((2, 1), (2, 1, 1), 1)] == 3


def test_Q_degree_four():
    rep = decomposition_report("Q", 4)
    assert rep.as_dict() == {((), (2, 1, 1), 4): 2, ((), (2, 2), 4): 2, ((), (1, 1, 1, 1), 4): 5}


def test_albanese_low_degrees():
    assert decomposition_report("Qprime", 1).as_dict() == {((1,), (1, 1), 1): 1, ((), (1,), 1): 1}
    rep = decomposition_report("Qprime", 2)
    assert len(rep) == 6 and rep.total_multiplicity() == 8
    assert rep.as_dict()[((1, 1), (1, 1, 1, 1), 2)] == 1


@pytest.mark.parametrize("d", range(0, 5))
def test_Q_matches_golden(d):
    assert decomposition_report("Q", d).as_dict() == load(f"autfn_Q_d{d}.json").as_dict()


@pytest.mark.parametrize("d", range(1, 6))
def test_Qprime_matches_golden(d):
    assert decomposition_report("Qprime", d).as_dict() == load(f"albanese_Qprime_d{d}.json").as_dict()


def test_albanese_reports_agree_with_single_degree_runs():
    many = albanese_reports(4)
    for d in range(1, 5):
        assert many[d].as_dict() == decomposition_report("Qprime", d).as_dict()


def test_albanese_counts_table():
    with open(GOLDEN / "table1.csv") as fh:
        table = [(int(r["d"]), int(r["n_irr"]), int(r["sum_mult"])) for r in csv.DictReader(fh)]
    assert albanese_counts(5) == table[:5]


@pytest.mark.parametrize("d", range(0, 4))
def test_cell_vanishing(d):
    chi = ch_H(VariantSpec("Q", d))
    assert all(sum(mu) - sum(lam) == d and k == d for lam, mu, k in chi.terms)


@pytest.mark.parametrize("d", [0, 1, 2])
def test_monotone_truncation(d):
    small = decomposition_report("Q", d, 3, 3).as_dict()
    big = decomposition_report("Q", d, 4, 4).as_dict()
    inside = lambda key: sum(key[0]) <= 3 and sum(key[1]) <= 3
    assert {k: v for k, v in big.items() if inside(k)} == small


@pytest.mark.parametrize("d", range(0, 4))
def test_Qtilde_is_genuine(d):
    rep = decomposition_report("Qtilde", d, p_max=3)
    assert rep.integral and rep.nonnegative


def test_virtual_input_is_a_hard_error():
    tr = Truncation(2, 2, -4, 4)
    virtual = BiSymSeries.monomial((), (2,), 1, trunc=tr)  # p_2(y) = h_2 - e_2
    with pytest.raises(PipelineError):
        _check_genuine(expand_cells(virtual), "virtual")


def test_parallel_expansion_is_deterministic():
    chi = ch_H(VariantSpec("Q", 1))
    assert expand_cells(chi, threads=2).as_dict() == expand_cells(chi, threads=1).as_dict()
