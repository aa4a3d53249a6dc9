"""
Solution Set Analyzer
Boundedness, uniqueness and connectivity of a polyhedral solution set
"""

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from loguru import logger

from exactmath import LPStatus, Vec, ONE, lp_max, unit_row
from model import Piece
from solver import SolutionSet
from utils import ordered_map

EMPTY_SET_CONVENTION = "empty solution set: connected=true, bounded=true, unique=false"


@dataclass(frozen=True)
class PieceGraph:
    """Pieces as nodes; an edge joins two pieces whose polyhedra intersect"""
    nodes: Tuple[int, ...]
    edges: Tuple[Tuple[int, int], ...]

    def neighbours(self, node: int) -> List[int]:
        return [b if a == node else a for a, b in self.edges if node in (a, b)]

    def to_dict(self) -> Dict[str, Any]:
        return {"nodes": list(self.nodes), "edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class Component:
    pieces: Tuple[int, ...]
    bounded: bool

    def to_dict(self) -> Dict[str, Any]:
        return {"pieces": list(self.pieces), "bounded": self.bounded}


def _pieces_intersect(pair: Tuple[Piece, Piece]) -> bool:
    first, second = pair
    combined = first.constraints.combine(second.constraints)
    return lp_max(combined.to_program()).is_feasible


def piece_graph(s: SolutionSet) -> PieceGraph:
    pairs = list(itertools.combinations(range(len(s.pieces)), 2))
    hits = ordered_map(_pieces_intersect, [(s.pieces[i], s.pieces[j]) for i, j in pairs])
    edges = tuple(pair for pair, hit in zip(pairs, hits) if hit)
    logger.debug(f"Piece graph: {len(s.pieces)} nodes, {len(edges)} edges")
    return PieceGraph(tuple(range(len(s.pieces))), edges)


def recession_direction(piece: Piece) -> Optional[Vec]:
    """
    Nonzero direction of the recession cone {E v = 0, G v <= 0}, or None

    Maximizes ±v_j over the cone intersected with the box -1 <= v <= 1.
    """
    cone = piece.constraints.homogeneous()
    num_vars = cone.num_vars
    box = tuple((unit_row(num_vars, j, s), ONE) for j in range(num_vars) for s in (ONE, -ONE))
    for j in range(num_vars):
        for s in (ONE, -ONE):
            result = lp_max(cone.to_program(unit_row(num_vars, j, s), box))
            if result.is_optimal and result.value > 0:
                return result.witness
    return None


def is_point_piece(piece: Piece) -> bool:
    """True iff the piece is a single point (max and min of every coordinate coincide)"""
    constraints = piece.constraints
    for j in range(constraints.num_vars):
        high = lp_max(constraints.to_program(unit_row(constraints.num_vars, j)))
        low = lp_max(constraints.to_program(unit_row(constraints.num_vars, j, -ONE)))
        if high.status is not LPStatus.OPTIMAL or low.status is not LPStatus.OPTIMAL:
            return False
        if high.value != -low.value:
            return False
    return True


def is_bounded(s: SolutionSet) -> bool:
    """Every piece has a trivial recession cone; the empty set is bounded"""
    return all(d is None for d in ordered_map(recession_direction, s.pieces))


def is_unique(s: SolutionSet) -> bool:
    """Non-empty, every piece a point, and all pieces the same point"""
    if s.is_empty:
        return False
    if len({p.sample.stacked() for p in s.pieces}) != 1:
        return False
    return all(ordered_map(is_point_piece, s.pieces))


def _components(graph: PieceGraph) -> List[Tuple[int, ...]]:
    seen = set()
    groups = []
    for start in graph.nodes:
        if start in seen:
            continue
        queue = deque([start])
        seen.add(start)
        group = []
        while queue:
            node = queue.popleft()
            group.append(node)
            for nxt in graph.neighbours(node):
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        groups.append(tuple(sorted(group)))
    return groups


def is_connected(s: SolutionSet, graph: Optional[PieceGraph] = None) -> bool:
    """Piece graph connected; the empty set counts as connected"""
    if s.is_empty:
        return True
    graph = graph or piece_graph(s)
    return len(_components(graph)) == 1


def components(s: SolutionSet, graph: Optional[PieceGraph] = None) -> List[Component]:
    """Connected components with a boundedness flag each"""
    if s.is_empty:
        return []
    graph = graph or piece_graph(s)
    directions = ordered_map(recession_direction, s.pieces)
    return [Component(group, all(directions[i] is None for i in group)) for group in _components(graph)]


@dataclass(frozen=True)
class AnalysisReport:
    bounded: bool
    unique: bool
    connected: bool
    pieces: int
    graph: PieceGraph
    components: Tuple[Component, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "bounded": self.bounded,
            "unique": self.unique,
            "connected": self.connected,
            "pieces": self.pieces,
            "graph": [list(e) for e in self.graph.edges],
            "components": [c.to_dict() for c in self.components],
            "conventions": EMPTY_SET_CONVENTION,
        }


def analyze(s: SolutionSet) -> AnalysisReport:
    """Full structural report of a solution set"""
    graph = piece_graph(s)
    comps = components(s, graph)
    return AnalysisReport(
        bounded=all(c.bounded for c in comps),
        unique=is_unique(s),
        connected=is_connected(s, graph),
        pieces=len(s.pieces),
        graph=graph,
        components=tuple(comps),
    )
