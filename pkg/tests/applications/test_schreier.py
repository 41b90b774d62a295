import pytest

from lllocal.applications.edge_coloring import verify_edge_coloring
from lllocal.applications.schreier import (
    Generator,
    SchreierAction,
    classify,
    cycles_of,
    dump_action,
    load_action,
    schreier_edge_coloring,
    schreier_graph,
    translation_action,
)
from lllocal.exceptions import InvalidInputError, PreconditionError


def test_cycles_of():
    assert cycles_of((1, 2, 0, 4, 3)) == [(0, 1, 2), (3, 4)]


def test_translation_action_names_and_classification():
    action = translation_action((12,), [1, 6])
    assert [g.name for g in action.generators] == ["+1", "-1", "+6"]
    classification = classify(action)
    assert classification.order_two == ["+6"]
    assert classification.representatives == ["+1"]
    assert classification.even == ["+1"]
    assert classification.orders["+1"] == 12
    assert classification.size == 3


def test_schreier_graph_labels_every_edge():
    G, labels = schreier_graph(translation_action((12,), [1, 6]))
    assert G.m == 18
    assert sum(1 for name in labels.values() if name == "+6") == 6
    assert set(labels.values()) == {"+1", "+6"}


def test_even_orders_color_directly():
    result = schreier_edge_coloring(translation_action((12,), [1, 6]))
    assert result.palette == 3
    assert result.report["bound"] == 4
    assert "section" not in result.report


def test_odd_orders_go_through_a_section():
    action = translation_action((9,), [1, 3])
    result = schreier_edge_coloring(action)
    G, _ = schreier_graph(action)
    assert verify_edge_coloring(G, result.colors).ok
    assert result.palette <= 5
    assert len(result.report["section"]) == 4


def test_long_generators_are_sectioned():
    result = schreier_edge_coloring(translation_action((12,), [1, 6], long=[0]))
    assert result.classification.long == ["+1"]
    assert result.palette <= 4
    assert len(result.report["section"]) == 1


@pytest.mark.parametrize("via_sections", [False, True])
def test_triangle_needs_three_colors(via_sections):
    result = schreier_edge_coloring(translation_action((3,), [1]), via_sections=via_sections, seed=2)
    assert result.palette == 3
    assert sorted(result.as_list()) == [0, 1, 2]


def test_torus_translations():
    result = schreier_edge_coloring(translation_action((4, 4), [(1, 0), (0, 1)]))
    assert result.classification.representatives == ["+(1,0)", "+(0,1)"]
    assert result.palette == 4


@pytest.mark.parametrize("moduli", [(3, 3), (3, 5), (5, 3)])
def test_odd_tori_without_a_section_fall_back_to_fan_rotation(moduli):
    action = translation_action(moduli, [(1, 0), (0, 1)])
    result = schreier_edge_coloring(action)
    G, _ = schreier_graph(action)
    assert verify_edge_coloring(G, result.colors).ok
    assert result.report["section"] is None
    assert result.report["method"] == "fan-rotation"
    assert result.palette <= 5


def test_odd_torus_with_room_keeps_the_section():
    result = schreier_edge_coloring(translation_action((5, 5), [(1, 0), (0, 1)]))
    assert result.report["method"] == "sections"
    assert len(result.report["section"]) == 10
    assert result.palette <= 5


def test_single_involution_is_rejected():
    with pytest.raises(PreconditionError):
        schreier_edge_coloring(translation_action((4,), [2]))


@pytest.mark.parametrize(
    "generators",
    [
        (Generator("a", (1, 2, 0), "a"),),
        (Generator("a", (1, 0, 2), "a"),),
        (Generator("a", (0, 1, 2), "a"),),
        (Generator("a", (1, 2, 0), "b"),),
        (Generator("a", (1, 2, 0), "b"), Generator("b", (1, 2, 0), "a")),
        (Generator("a", (1, 2, 3, 0), "b"),),
    ],
)
def test_actions_are_validated(generators):
    with pytest.raises(InvalidInputError):
        SchreierAction(3, generators)


def test_translation_steps_are_validated():
    with pytest.raises(InvalidInputError):
        translation_action((6,), [1, 5])
    with pytest.raises(InvalidInputError):
        translation_action((6,), [0])
    with pytest.raises(InvalidInputError):
        translation_action((6, 2), [1])


def test_action_files(tmp_path):
    action = translation_action((5,), [1, 2])
    dump_action(action, tmp_path / "action.json")
    assert load_action(tmp_path / "action.json") == action
    (tmp_path / "broken.json").write_text('{"points": 2}')
    with pytest.raises(InvalidInputError):
        load_action(tmp_path / "broken.json")
