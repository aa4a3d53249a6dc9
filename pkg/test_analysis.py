"""
Test boundedness, uniqueness and connectivity analysis of solution sets
"""

import sys
import os

# Add src directory to path
sys.path.append(os.path.join(os.path.dirname(__file__), 'src'))

from analysis import (
    EMPTY_SET_CONVENTION, analyze, components, is_bounded, is_connected, is_point_piece, is_unique,
    piece_graph, recession_direction
)
from harness.fixtures import (
    chain_instance, diagonal_hlcp_instance, infeasible_instance, ray_instance, two_point_instance
)
from model import Instance, MatrixTuple
from solver import solve_all


def test_unique_point():
    s = solve_all(diagonal_hlcp_instance())
    assert is_unique(s)
    assert is_bounded(s)
    assert is_connected(s)
    assert all(is_point_piece(p) for p in s.pieces)


def test_two_points_are_disconnected():
    s = solve_all(two_point_instance())
    graph = piece_graph(s)
    assert graph.edges == ()
    assert not is_connected(s, graph)
    assert not is_unique(s)
    assert is_bounded(s)
    assert [c.pieces for c in components(s, graph)] == [(0,), (1,)]


def test_ray_is_unbounded_and_connected():
    s = solve_all(ray_instance())
    assert not is_bounded(s)
    assert is_connected(s)
    assert not is_unique(s)
    directions = [recession_direction(p) for p in s.pieces]
    assert any(d is not None and d[1] > 0 for d in directions)


def test_crossing_half_axes():
    # C = ([0], [0]), q = 0: the half-axes x1 = 0 and x0 = 0 meet at the origin
    s = solve_all(Instance(MatrixTuple.from_lists([[[0]], [[0]]]), (), (0,)))
    report = analyze(s)
    assert report.connected
    assert not report.bounded
    assert report.pieces == 2
    assert report.graph.edges == ((0, 1),)


def test_empty_set_conventions():
    s = solve_all(infeasible_instance())
    report = analyze(s)
    assert report.to_dict() == {
        "bounded": True,
        "unique": False,
        "connected": True,
        "pieces": 0,
        "graph": [],
        "components": [],
        "conventions": EMPTY_SET_CONVENTION,
    }


def test_chain_report():
    report = analyze(solve_all(chain_instance())).to_dict()
    assert report["unique"] and report["bounded"] and report["connected"]
