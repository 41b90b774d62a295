from fractions import Fraction

import pytest

from lllocal.applications.coloring import proper_coloring_csp
from lllocal.applications.sinkless import sinkless_orientation_csp
from lllocal.constants import REPORTED_CONDITIONS, ConditionKind, Verdict
from lllocal.exceptions import InvalidInputError
from lllocal.graphs.generators import cycle, path, random_regular
from lllocal.shattering.witnesses import interval_separation
from lllocal.solvers.conditions import (
    LLLCondition,
    check_condition,
    condition_report,
    shattering_number_upper_bounds,
)


def test_sinkless_on_cubic_graphs_misses_the_classic_condition():
    csp = sinkless_orientation_csp(random_regular(10, 3, seed=1))
    report = check_condition(csp, LLLCondition.classic())
    assert (report.p, report.d, report.lhs) == (Fraction(1, 8), 3, Fraction(1, 2))
    assert report.verdict == Verdict.FAILS
    assert not report.holds
    assert check_condition(csp, LLLCondition.exponential()).verdict == Verdict.FAILS


@pytest.mark.parametrize("q,holds", [(8, False), (9, True)])
def test_classic_condition_on_cycle_coloring(q, holds):
    assert check_condition(proper_coloring_csp(cycle(10), q), LLLCondition.classic()).holds is holds


@pytest.mark.parametrize("q,holds", [(66, False), (67, True)])
def test_shatter_two_on_cycle_coloring(q, holds):
    csp = proper_coloring_csp(cycle(10), q)
    assert check_condition(csp, LLLCondition.shatter(2)).holds is holds
    assert check_condition(csp, LLLCondition.separation(1)).holds is holds


def test_shatter_zero_compares_p_with_one():
    assert LLLCondition.shatter(0).evaluate(Fraction(1), 5).verdict == Verdict.HOLDS
    assert LLLCondition.shatter(0).evaluate(Fraction(1, 2), 5).verdict == Verdict.HOLDS_STRICTLY


def test_polynomial_condition_is_exact():
    bound = Fraction(1, 2**15)
    assert LLLCondition.polynomial().evaluate(bound, 0).verdict == Verdict.HOLDS
    assert LLLCondition.polynomial().evaluate(bound / 2**8, 1).verdict == Verdict.HOLDS
    assert LLLCondition.polynomial().evaluate(bound, 1).verdict == Verdict.FAILS


def test_exponential_condition_is_strict():
    assert LLLCondition.exponential().evaluate(Fraction(1, 9), 3).verdict == Verdict.HOLDS_STRICTLY
    assert LLLCondition.exponential().evaluate(Fraction(1, 8), 3).verdict == Verdict.FAILS


def test_negative_s_rejected():
    with pytest.raises(InvalidInputError):
        LLLCondition.shatter(-1)


def test_condition_report_covers_every_kind():
    reports = condition_report(proper_coloring_csp(path(5), 9), 2)
    assert [r.kind for r in reports] == REPORTED_CONDITIONS
    shatter = next(r for r in reports if r.kind == ConditionKind.SHATTER)
    assert shatter.s == 2
    assert shatter.inequality == "p(d+1)^2 <= e^-2"
    body = shatter.as_dict()
    assert body["p"] == "1/9"
    assert body["verdict"] == Verdict.FAILS.value
    assert body["precision_bits"] == 64


def test_shattering_number_bounds():
    G = cycle(12)
    csp = proper_coloring_csp(G, 3)
    bounds = shattering_number_upper_bounds(csp, G, interval_separation(G, 3))
    assert bounds == {"from_witness": 2, "from_domains": 2, "achieved": 2}
    with pytest.raises(InvalidInputError):
        shattering_number_upper_bounds(csp, path(12), interval_separation(path(12), 3))
