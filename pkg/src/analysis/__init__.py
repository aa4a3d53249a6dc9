# Solution-set structure: boundedness, uniqueness, connectivity

from .solution_analyzer import (
    PieceGraph, Component, AnalysisReport, EMPTY_SET_CONVENTION, piece_graph, recession_direction,
    is_point_piece, is_bounded, is_unique, is_connected, components, analyze
)

__all__ = [
    'PieceGraph', 'Component', 'AnalysisReport', 'EMPTY_SET_CONVENTION', 'piece_graph',
    'recession_direction', 'is_point_piece', 'is_bounded', 'is_unique', 'is_connected',
    'components', 'analyze'
]
