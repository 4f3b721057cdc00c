"""
Crossings with an empty local overlap, read off the triangles a curve visits.

A curve leaves its starting marked point through the corner of its first
triangle opposite the first crossed arc. Another curve (or the same one)
passing through that triangle crosses this first segment when it separates
the corner from the crossed arc. Such a crossing has no overlap in the snake
graphs and is resolved by grafting at the tile where the second curve starts.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from ..errors import SurfaceError
from ..graphs.base import NE, Side, side_of, tile_sign
from ..graphs.snake import EdgeGraph, SnakeGraph
from ..graphs.strand import Strand
from ..resolutions.grafting import graft_pair, self_graft
from ..resolutions.report import ResolutionReport
from .curves import find_realization
from .triangulation import Triangulation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GraftSite:
    """Grafting ``second`` onto tile ``position`` of ``first``; ``second`` is ``None`` for a self-crossing.

    ``segments`` locates the crossing on the curves as given: the index of the
    segment of each curve that carries it, segment k lying between the k-th
    and (k+1)-th crossed arcs. A crossing with an arc of the triangulation
    is located by the tile of the curve instead.
    """

    first: SnakeGraph
    second: Optional[Union[SnakeGraph, EdgeGraph]]
    position: int
    edge: Optional[Side]
    segments: Tuple[int, int]

    def resolve(self) -> ResolutionReport:
        if self.second is None:
            report = self_graft(self.first, self.position, self.edge)
        else:
            report = graft_pair(self.first, self.second, self.position, self.edge)
        report.notes['segments'] = self.segments
        return report


def reversed_graph(graph: SnakeGraph) -> SnakeGraph:
    """The graph of the same curve walked from its other end."""
    return Strand.from_snake(graph).turned().scaled(-1).to_snake()


def _mirrored(graph: SnakeGraph) -> SnakeGraph:
    return Strand.from_snake(graph).scaled(-1).to_snake()


def realized(surface: Triangulation, graph: SnakeGraph) -> Optional[Tuple[SnakeGraph, List[int]]]:
    """The graph in the frame its curve is drawn in, with the triangles the curve visits."""
    if not isinstance(graph, SnakeGraph) or not graph.is_labeled:
        return None
    for candidate in (graph, _mirrored(graph)):
        start = find_realization(surface, candidate)
        if start is not None:
            try:
                return candidate, surface.walk(start, candidate.tile_labels)
            except SurfaceError:
                break
    logger.debug(f"Graph with tiles {graph.tile_labels} is not the graph of a curve on the surface")
    return None


def _orientations(surface: Triangulation, graph: SnakeGraph):
    found = realized(surface, graph)
    if found is None:
        return []
    forward, visited = found
    backward = reversed_graph(forward)
    return [(forward, visited, False), (backward, list(reversed(visited)), True)]


def _end_edge(surface: Triangulation, labels: Tuple[str, ...], last: int, entering: str) -> Side:
    """The north or east edge of the last tile lying on the side ``entering`` leaves open."""
    d = len(labels)
    label = surface.third(last, labels[-1], entering)
    g = 1 if surface.pred(last, labels[-1]) == label else -1
    return side_of((NE, g), tile_sign(d))


def _sites(surface: Triangulation, labels, visited, start: int, entering: str, backward: bool):
    """Positions s where a curve starting in triangle ``start`` across ``entering`` is grafted."""
    d = len(labels)
    for s in range(1, d + 1):
        if visited[s] != start:
            continue
        if s < d:
            if not backward and entering == surface.third(visited[s], labels[s - 1], labels[s]):
                yield s, None
        elif entering != labels[-1]:
            yield s, _end_edge(surface, labels, visited[s], entering)


def pair_graft_sites(surface: Triangulation, first: SnakeGraph, second: SnakeGraph) -> List[GraftSite]:
    """Crossings of two curves where one of them starts; one site per crossing."""
    sites = {}
    ones = _orientations(surface, first)
    twos = _orientations(surface, second)
    for g1, v1, back1 in ones:
        for g2, v2, back2 in twos:
            for host, hv, hback, hd, guest, gv, gback, gd, hosted_first in (
                    (g1, v1, back1, first.d, g2, v2, back2, second.d, True),
                    (g2, v2, back2, second.d, g1, v1, back1, first.d, False)):
                for s, edge in _sites(surface, host.tile_labels, hv, gv[0], guest.tile_labels[0], hback):
                    host_segment = hd - s if hback else s
                    guest_segment = gd if gback else 0
                    key = (host_segment, guest_segment) if hosted_first else (guest_segment, host_segment)
                    sites.setdefault(key, GraftSite(host, guest, s, edge, key))
    found = list(sites.values())
    logger.debug(f"{len(found)} grafting sites between the two curves")
    return found


def self_graft_sites(surface: Triangulation, graph: SnakeGraph) -> List[GraftSite]:
    """Points where a curve crosses its own first or last segment."""
    sites = {}
    for oriented, visited, backward in _orientations(surface, graph):
        labels = oriented.tile_labels
        for s, edge in _sites(surface, labels, visited, visited[0], labels[0], backward):
            segments = (graph.d - s, graph.d) if backward else (0, s)
            key = tuple(sorted(segments))
            sites.setdefault(key, GraftSite(oriented, None, s, edge, key))
    return list(sites.values())


def edge_graft_sites(graph: SnakeGraph, edge: EdgeGraph) -> List[GraftSite]:
    """Every tile where a curve crosses the arc ``edge`` of the triangulation."""
    labels = graph.tile_labels or ()
    return [GraftSite(graph, edge, s, None, (s, 0))
            for s, label in enumerate(labels, start=1) if label == edge.label]
