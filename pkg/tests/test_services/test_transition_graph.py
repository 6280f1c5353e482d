# tests/test_services/test_transition_graph.py
import os

import pytest

from src.core.errors import OddLength, OutputUnwritable
from src.core.models import TransitionGraph, ZmTuple
from src.services.transition_graph import basic_cycle_graph, to_dot, write_dot


@pytest.fixture
def z2_6_graph():
    return basic_cycle_graph(6, 2, depth=2)


def test_z2_6_graph_structure(z2_6_graph, z2_6_cycle):
    assert [u.entries for u in z2_6_graph.cycle_nodes] == z2_6_cycle
    assert z2_6_graph.node_count == 24
    assert z2_6_graph.edge_count == 24
    assert z2_6_graph.layer_sizes() == [6, 6, 12]
    for node in z2_6_graph.cycle_nodes:
        assert z2_6_graph.in_degree(node) == 2
    for node in z2_6_graph.nodes:
        assert z2_6_graph.out_degree(node) == 1


def test_outer_layer_has_no_incoming_edges(z2_6_graph):
    for node in z2_6_graph.layers[-1]:
        assert z2_6_graph.in_degree(node) == 0


def test_basic_tuple_is_in_the_first_layer(z2_6_graph):
    assert ZmTuple.of([0, 0, 0, 0, 0, 1], 2) in z2_6_graph.layers[2]
    assert ZmTuple.of([0, 0, 0, 0, 1, 1], 2) in z2_6_graph.layers[1]


def test_fixed_point_cycle_has_self_loop():
    graph = basic_cycle_graph(4, 2, depth=0)
    zero = ZmTuple.of([0, 0, 0, 0], 2)
    assert graph.cycle_nodes == (zero,)
    assert graph.edges == ((zero, zero),)


def test_depth_zero_keeps_only_the_cycle():
    graph = basic_cycle_graph(4, 5, depth=0)
    assert graph.node_count == 4
    assert graph.edge_count == 4


def test_graph_needs_even_length():
    with pytest.raises(OddLength):
        basic_cycle_graph(3, 2, depth=1)


def test_dot_output_is_deterministic(z2_6_graph):
    text = to_dot(z2_6_graph)
    assert text == to_dot(basic_cycle_graph(6, 2, depth=2))
    lines = text.splitlines()
    assert lines[0] == "digraph ducci {"
    assert lines[-1] == "}"
    assert sum("doublecircle" in line for line in lines) == 6
    assert sum("->" in line for line in lines) == 24
    assert '  "0,0,0,1,0,1" [label="0,0,0,1,0,1", shape=doublecircle];' in lines


def test_write_dot_creates_parent_directories(z2_6_graph, dot_path):
    assert write_dot(z2_6_graph, dot_path) == dot_path
    with open(dot_path, encoding="utf-8") as f:
        assert f.read() == to_dot(z2_6_graph)


def test_write_dot_reports_unwritable_output(z2_6_graph, tmp_path, mocker):
    mocker.patch("src.services.transition_graph.open", side_effect=PermissionError("read-only"), create=True)
    with pytest.raises(OutputUnwritable):
        write_dot(z2_6_graph, str(tmp_path / "x.dot"))
    assert not os.path.exists(tmp_path / "x.dot")


def test_empty_graph_renders_header_and_footer_only():
    assert to_dot(TransitionGraph(n=4, m=2)) == "digraph ducci {\n}\n"
