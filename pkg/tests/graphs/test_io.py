import pytest

from lllocal.exceptions import InvalidInputError
from lllocal.graphs.generators import cycle, path
from lllocal.graphs.io import dump_graph, load_graph, to_dot


def test_dump_then_load(tmp_path):
    G = cycle(7)
    target = tmp_path / "g.json"
    dump_graph(G, target)
    assert load_graph(target) == G


def test_load_rejects_bad_edges(write_json):
    bad = write_json("bad.json", {"n": 2, "edges": [[0, 2]]})
    with pytest.raises(InvalidInputError):
        load_graph(bad)
    loop = write_json("loop.json", {"n": 2, "edges": [[1, 1]]})
    with pytest.raises(InvalidInputError):
        load_graph(loop)


def test_dot_output_carries_labels_and_colors():
    text = to_dot(path(3), vertex_labels=[5, 6, 7], edge_colors=[0, 1], name="P")
    assert text.startswith("graph P {")
    assert '1 [label="1:6"];' in text
    assert '0 -- 1 [color="black", label="0"];' in text
    assert '1 -- 2 [color="red", label="1"];' in text
