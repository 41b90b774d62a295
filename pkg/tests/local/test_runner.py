from fractions import Fraction

import pytest

from lllocal.exceptions import BudgetExceededError, InvalidInputError
from lllocal.graphs.generators import cycle, path
from lllocal.local.algorithms import greedy_by_id, own_label
from lllocal.local.problems import distinct_label_lcl, proper_coloring_lcl
from lllocal.local.runner import (
    deterministic_success,
    exact_success_probability,
    permutation_sweep,
    run_deterministic,
    run_local,
    run_randomized,
    success_threshold,
)


def test_labelings_are_validated():
    with pytest.raises(InvalidInputError):
        run_local(own_label(), path(3), [0, 1], 0)
    with pytest.raises(InvalidInputError):
        run_local(own_label(), path(3), [0, -1, 2], 0)


def test_worker_count_does_not_change_outputs():
    ids = [3, 0, 4, 1, 5, 2]
    assert run_local(greedy_by_id(5), path(6), ids, 5, max_workers=3) == run_local(greedy_by_id(5), path(6), ids, 5)


def test_deterministic_runs_need_a_bijection():
    with pytest.raises(InvalidInputError):
        run_deterministic(own_label(), path(3), [0, 0, 1], 0)
    assert deterministic_success(distinct_label_lcl(), own_label(), cycle(5), [4, 3, 2, 1, 0], 0)


def test_greedy_survives_every_identifier_assignment():
    result = permutation_sweep(proper_coloring_lcl(3), greedy_by_id(5), path(6), 5)
    assert result.ok
    assert result.checked == 720


def test_sweep_reports_the_first_failure():
    result = permutation_sweep(proper_coloring_lcl(2), own_label(), path(3), 0)
    assert not result.ok
    assert result.checked == 1
    assert result.counterexample == [0, 1, 2]


def test_sweep_is_capped():
    with pytest.raises(BudgetExceededError):
        permutation_sweep(distinct_label_lcl(), own_label(), path(9), 0)


def test_randomized_runs_are_seeded_per_trial():
    report = run_randomized(distinct_label_lcl(), own_label(), cycle(6), ell=1000, T=0, trials=200, seed=5)
    parallel = run_randomized(
        distinct_label_lcl(), own_label(), cycle(6), ell=1000, T=0, trials=200, seed=5, max_workers=4
    )
    assert parallel.successes == report.successes
    assert report.rate >= 0.9
    assert report.ci_low <= report.rate <= report.ci_high
    body = report.as_dict()
    assert body["threshold"] == pytest.approx(5 / 6)
    assert body["seed"] == 5


def test_single_label_never_succeeds():
    report = run_randomized(distinct_label_lcl(), own_label(), path(2), ell=1, T=0, trials=50)
    assert report.successes == 0
    assert report.ci_low == 0.0
    assert not report.meets_threshold


def test_randomized_rejects_empty_runs():
    with pytest.raises(InvalidInputError):
        run_randomized(distinct_label_lcl(), own_label(), path(2), ell=2, T=0, trials=0)


@pytest.mark.parametrize("n,ell,expected", [(2, 3, Fraction(2, 3)), (3, 2, Fraction(1, 4))])
def test_exact_success_probability(n, ell, expected):
    assert exact_success_probability(distinct_label_lcl(), own_label(), path(n), ell, 0) == expected


def test_exact_enumeration_is_capped():
    with pytest.raises(BudgetExceededError) as info:
        exact_success_probability(distinct_label_lcl(), own_label(), path(10), 10, 0)
    assert info.value.details["outcomes"] == 10**10


def test_success_threshold():
    assert success_threshold(4) == 0.75
    assert success_threshold(0) == 1.0
