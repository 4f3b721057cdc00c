"""
Perfect matchings of snake graphs, the minimal/maximal matchings and the
tiles enclosed between two matchings.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, List, Optional, Tuple, Union

import networkx as nx

from ..errors import GraphError
from ..graphs.base import Side
from ..graphs.snake import EdgeGraph, EdgeRef, SnakeGraph
from ..graphs.strand import Strand
from .host import HostGraph

logger = logging.getLogger(__name__)

SINGLE_EDGE = EdgeRef(0, Side.S)


@dataclass(frozen=True)
class Matching:
    """A set of edges of a host graph, with goodness witnesses for band graphs."""

    edges: FrozenSet[EdgeRef]
    witnesses: Tuple[EdgeRef, ...] = ()

    def sorted_edges(self) -> List[EdgeRef]:
        return sorted(self.edges)

    def sort_key(self) -> Tuple:
        return tuple(ref.sort_key() for ref in self.sorted_edges())

    def __contains__(self, ref: EdgeRef) -> bool:
        return ref in self.edges

    def __len__(self) -> int:
        return len(self.edges)

    def __str__(self) -> str:
        return ' '.join(str(ref) for ref in self.sorted_edges())


def sweep(host: HostGraph) -> List[FrozenSet[EdgeRef]]:
    """All perfect matchings by depth-first backtracking.

    Each step matches the lowest-numbered uncovered vertex with each free
    neighbour in turn; vertices are numbered tile by tile from the first tile.
    """
    results: List[FrozenSet[EdgeRef]] = []
    covered = set()
    chosen: List[EdgeRef] = []
    order = host.vertices

    def extend(position: int) -> None:
        while position < len(order) and order[position] in covered:
            position += 1
        if position == len(order):
            results.append(frozenset(chosen))
            return
        vertex = order[position]
        covered.add(vertex)
        for ref, other in host.adjacency[vertex]:
            if other in covered:
                continue
            covered.add(other)
            chosen.append(ref)
            extend(position + 1)
            chosen.pop()
            covered.discard(other)
        covered.discard(vertex)

    extend(0)
    return results


def exhaustive(host: HostGraph) -> List[FrozenSet[EdgeRef]]:
    """All perfect matchings by brute-force subset search."""
    size, odd = divmod(len(host.vertices), 2)
    if odd:
        return []
    return [frozenset(subset) for subset in itertools.combinations(host.edges, size) if host.is_perfect(subset)]


def _ordered(edge_sets) -> List[Matching]:
    return sorted((Matching(edges) for edges in edge_sets), key=Matching.sort_key)


def enumerate_matchings(graph: Union[SnakeGraph, EdgeGraph, None]) -> List[Matching]:
    """Every perfect matching of a snake graph in lexicographic order."""
    if graph is None:
        return []
    if isinstance(graph, EdgeGraph):
        return [Matching(frozenset([SINGLE_EDGE]))]
    return _ordered(sweep(HostGraph(Strand.from_snake(graph))))


def enumerate_matchings_exhaustive(graph: SnakeGraph) -> List[Matching]:
    return _ordered(exhaustive(HostGraph(Strand.from_snake(graph))))


@lru_cache(maxsize=None)
def count_matchings(graph: Union[SnakeGraph, EdgeGraph]) -> int:
    if isinstance(graph, EdgeGraph):
        return 1
    return len(sweep(HostGraph(Strand.from_snake(graph.unlabeled()))))


def minimal_matching(graph: Union[SnakeGraph, EdgeGraph], rel: Optional[int] = None) -> Matching:
    """The minimal matching P- for the relative orientation ``rel`` of the first tile."""
    if isinstance(graph, EdgeGraph):
        return Matching(frozenset([SINGLE_EDGE]))
    rel = graph.rel if rel is None else rel
    return Matching(HostGraph(Strand.from_snake(graph)).minimal_edges(rel))


def maximal_matching(graph: Union[SnakeGraph, EdgeGraph], rel: Optional[int] = None) -> Matching:
    if isinstance(graph, EdgeGraph):
        return Matching(frozenset([SINGLE_EDGE]))
    rel = graph.rel if rel is None else rel
    return Matching(HostGraph(Strand.from_snake(graph)).minimal_edges(-rel))


def _inside(point: Tuple[float, float], polygon: List[Tuple[int, int]]) -> bool:
    """Even-odd ray casting to the right of ``point``."""
    x, y = point
    inside = False
    n = len(polygon)
    for i in range(n):
        (x1, y1), (x2, y2) = polygon[i], polygon[(i + 1) % n]
        if (y1 > y) != (y2 > y):
            crossing = x1 + (y - y1) * (x2 - x1) / (y2 - y1)
            if crossing > x:
                inside = not inside
    return inside


def difference_cycles(host: HostGraph, first: FrozenSet[EdgeRef], second: FrozenSet[EdgeRef]) -> List[List[int]]:
    """Vertex cycles of the symmetric difference of two perfect matchings."""
    graph = nx.Graph()
    for ref in first ^ second:
        graph.add_edge(*host.endpoints[ref])
    cycles = []
    for component in nx.connected_components(graph):
        sub = graph.subgraph(component)
        if any(degree != 2 for _, degree in sub.degree()):
            raise GraphError("Symmetric difference is not a union of disjoint cycles")
        cycles.append([u for u, _ in nx.find_cycle(sub)])
    return cycles


def enclosed_in_host(host: HostGraph, matching: FrozenSet[EdgeRef], minimal: FrozenSet[EdgeRef]) -> List[int]:
    if not host.is_perfect(matching) or not host.is_perfect(minimal):
        raise GraphError("enclosed_tiles needs two perfect matchings")
    coords = host.coordinates()
    polygons = [[coords[v] for v in cycle] for cycle in difference_cycles(host, matching, minimal)]
    enclosed = []
    for j, (x, y) in enumerate(host.tile_positions(), start=1):
        centre = (x + 0.5, y + 0.5)
        if sum(_inside(centre, polygon) for polygon in polygons) % 2:
            enclosed.append(j)
    return enclosed


def enclosed_tiles(graph: SnakeGraph, matching: Matching, minimal: Matching) -> List[int]:
    """Indices of the tiles enclosed by the cycles of ``minimal ⊖ matching``."""
    return enclosed_in_host(HostGraph(Strand.from_snake(graph)), matching.edges, minimal.edges)
