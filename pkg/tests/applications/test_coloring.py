import pytest

from lllocal.applications.coloring import (
    degree_deficient_coloring,
    proper_coloring_csp,
    section_coloring,
    union_coloring,
    verify_vertex_coloring,
)
from lllocal.exceptions import InvalidInputError
from lllocal.graphs.generators import cycle, disjoint_union, path


def test_one_constraint_per_edge():
    csp = proper_coloring_csp(path(3), 2)
    assert [B.domain for B in csp.constraints] == [(0, 1), (1, 2)]
    assert csp.constraints[0].forbidden == {(0, 0), (1, 1)}
    with pytest.raises(InvalidInputError):
        proper_coloring_csp(path(3), 0)


def test_verify_reports_conflicts_and_gaps():
    check = verify_vertex_coloring(cycle(3), [0, 1, 1])
    assert not check.ok
    assert check.conflicts == [(1, 2)]
    assert check.palette == 2
    partial = verify_vertex_coloring(path(3), {0: 0, 1: 1})
    assert partial.uncolored == [2]
    assert partial.as_dict()["ok"] is False


def test_union_shifts_each_part():
    coloring = union_coloring([((0, 1), {0: 0, 1: 1}), ((2,), {2: 0})])
    assert coloring.colors == {0: 0, 1: 1, 2: 2}
    assert coloring.palette == 3
    padded = union_coloring([((0,), {0: 0}), ((1,), {1: 0})], palettes=[3, 1], n=2)
    assert padded.as_list(2) == [0, 3]


@pytest.mark.parametrize(
    "parts,palettes,n",
    [
        ([((0, 1), {0: 0, 1: 0}), ((1,), {1: 0})], None, None),
        ([((0,), {0: 2})], [2], None),
        ([((0,), {0: 0})], None, 2),
        ([((0,), {0: 0})], [1, 1], None),
    ],
)
def test_union_rejects_bad_parts(parts, palettes, n):
    with pytest.raises(InvalidInputError):
        union_coloring(parts, palettes, n)


def test_degree_deficient_coloring():
    colors = degree_deficient_coloring(path(4), range(4), 2)
    assert verify_vertex_coloring(path(4), colors).ok
    assert set(colors.values()) == {0, 1}
    with pytest.raises(InvalidInputError):
        degree_deficient_coloring(cycle(4), range(4), 2)


def test_section_coloring_of_a_cycle():
    coloring = section_coloring(cycle(6), [range(6)], {0})
    assert coloring.palette == 3
    assert coloring.colors[0] == 0
    assert verify_vertex_coloring(cycle(6), coloring.colors).ok


def test_section_must_be_independent_and_complete():
    with pytest.raises(InvalidInputError):
        section_coloring(cycle(6), [range(6)], {0, 1})
    with pytest.raises(InvalidInputError):
        section_coloring(disjoint_union([path(2), path(2)]), [range(4)], {0})
