import pytest

from lllocal.bridge.pipeline import lcl_pipeline
from lllocal.constants import Verdict
from lllocal.exceptions import PreconditionError
from lllocal.graphs.generators import cycle, disjoint_union, path
from lllocal.local.algorithms import own_label
from lllocal.local.problems import distinct_label_lcl, non_monochromatic_lcl
from lllocal.local.runner import check_lcl
from lllocal.shattering.witnesses import SeparationWitness, interval_separation


def test_matching_edges_with_a_single_part():
    G = disjoint_union([path(2)] * 3)
    result = lcl_pipeline(distinct_label_lcl(), own_label(), 0, 100, G, SeparationWitness((tuple(range(6)),), 2))
    assert check_lcl(distinct_label_lcl(), G, result.labeling).ok
    assert result.report["verdict"] == "solved"
    assert result.report["d"] == 1
    assert result.report["budget"]["scaled"] == 4


def test_non_monochromatic_cycle_with_interval_witness():
    G = cycle(12)
    result = lcl_pipeline(non_monochromatic_lcl(), own_label(), 0, 30, G, interval_separation(G, 3))
    report = result.report
    assert check_lcl(non_monochromatic_lcl(), G, result.labeling).ok
    assert report["p"] == "1/900"
    assert report["d"] == 4
    assert report["condition"]["verdict"] == Verdict.HOLDS_STRICTLY.value
    assert report["budget"] == {"witness": 3, "locality": 3, "scaled": 9, "largest_class": 3}
    assert report["solve"]["round_count"] == 2


def test_explicit_budget_overrides_the_witness():
    G = cycle(12)
    result = lcl_pipeline(non_monochromatic_lcl(), own_label(), 0, 30, G, interval_separation(G, 3), L=4)
    assert result.report["budget"]["scaled"] == 12


def test_aborts_when_the_condition_fails():
    G = path(10)
    with pytest.raises(PreconditionError) as info:
        lcl_pipeline(distinct_label_lcl(), own_label(), 0, 30, G, interval_separation(G, 3))
    report = info.value.details
    assert report["verdict"] == "aborted"
    assert report["condition"]["verdict"] == Verdict.FAILS.value
    assert "budget" not in report
