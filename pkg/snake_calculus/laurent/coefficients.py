"""
Coefficients of resolutions and the Laurent identities they satisfy.

A summand whose coefficient is not fixed by its case is given the height of a
completion: the minimal matchings of its pieces are carried back to the input
graphs and completed there by boundary edges; the completion has to be unique.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

import networkx as nx

from ..errors import ResolutionError
from ..graphs.snake import EdgeRef
from ..graphs.strand import EdgePiece, Piece, Strand
from ..matchings.host import HostGraph
from ..matchings.perfect import enclosed_in_host, sweep
from ..resolutions.report import ResolutionReport, Term, TileRef
from .expansion import edge_weight, height, laurent_of, tile_monomial
from .poly import LaurentPoly

logger = logging.getLogger(__name__)


def _piece_edges(piece: Piece) -> List[Tuple[object, tuple]]:
    """``(cell, key)`` for every edge of the minimal matching of a piece."""
    if isinstance(piece, EdgePiece):
        return [(piece.cell, piece.key)]
    host = HostGraph(piece)
    edges = []
    for ref in host.minimal_edges():
        j, key = host.incidences[ref][0]
        edges.append((piece.cells[j - 1], key))
    return edges


def _window_enclosed(graph: HostGraph, edges: FrozenSet[EdgeRef], window: Tuple[int, int]) -> bool:
    tiles = set(enclosed_in_host(graph, edges, graph.minimal_edges()))
    return all(j in tiles for j in range(window[0], window[1] + 1))


def completion(hosts: Tuple[Optional[Strand], ...], term: Term,
               windows: Optional[Dict[int, Tuple[int, int]]] = None) -> Dict[int, FrozenSet[EdgeRef]]:
    """Per input graph, the matching that extends the pieces' minimal matchings by boundary edges.

    An input graph left without pieces has two such matchings; the one kept
    encloses its overlap window exactly when the partner's completion does not.
    """
    graphs = {h: HostGraph(host) for h, host in enumerate(hosts) if host is not None}
    required: Dict[int, Set[EdgeRef]] = {h: set() for h in graphs}
    for piece in term.pieces:
        for cell, key in _piece_edges(piece):
            origin = cell.origin
            if origin is None or origin.host not in graphs:
                raise ResolutionError("Piece without an input graph to complete in")
            required[origin.host].add(graphs[origin.host].edge_at(origin.index, origin.host_key(key)))

    candidates: Dict[int, List[FrozenSet[EdgeRef]]] = {}
    for h, graph in graphs.items():
        wanted = required[h]
        candidates[h] = [
            edges for edges in sweep(graph)
            if wanted <= edges and all(ref in wanted or graph.is_boundary(ref) for ref in edges)
        ]

    result = {h: found[0] for h, found in candidates.items() if len(found) == 1}
    for h, found in candidates.items():
        if h in result:
            continue
        partner = next((p for p in result if p != h), None)
        if found and windows and partner is not None and h in windows and partner in windows:
            partner_enclosed = _window_enclosed(graphs[partner], result[partner], windows[partner])
            found = [edges for edges in found
                     if _window_enclosed(graphs[h], edges, windows[h]) != partner_enclosed]
        if len(found) != 1:
            raise ResolutionError(f"Input graph {h + 1} has {len(found)} boundary completions, expected one")
        logger.debug(f"Completion of input graph {h + 1} fixed by its overlap window")
        result[h] = found[0]
    return result


def _warn_if_scattered(graph: HostGraph, edges: FrozenSet[EdgeRef], h: int) -> None:
    support = enclosed_in_host(graph, edges, graph.minimal_edges())
    if not support:
        return
    if not nx.is_connected(nx.path_graph(range(1, graph.d + 1)).subgraph(support)):
        logger.warning(f"Completion height of input graph {h + 1} is supported on tiles {support}, "
                       f"which are not connected")


def completion_height(hosts: Tuple[Optional[Strand], ...], term: Term,
                      windows: Optional[Dict[int, Tuple[int, int]]] = None) -> LaurentPoly:
    total = LaurentPoly.constant(1)
    for h, edges in sorted(completion(hosts, term, windows).items()):
        graph = HostGraph(hosts[h])
        _warn_if_scattered(graph, edges, h)
        total = total * height(graph, edges)
    return total


def tiles_monomial(hosts: Tuple[Optional[Strand], ...], tiles: Iterable[TileRef]) -> LaurentPoly:
    return tile_monomial(hosts[h].cells[j - 1].label for h, j in tiles)


def coefficient(report: ResolutionReport, term: Term, tiles: Optional[Tuple[TileRef, ...]]) -> LaurentPoly:
    if term.is_zero:
        return LaurentPoly()
    if tiles is None:
        return completion_height(report.hosts, term, report.notes.get('windows'))
    return tiles_monomial(report.hosts, tiles)


def coefficients(report: ResolutionReport) -> Tuple[LaurentPoly, LaurentPoly]:
    """The y-monomials of the two summands."""
    return (coefficient(report, report.with_overlap, report.y_with),
            coefficient(report, report.without_overlap, report.y_without))


def resolution_laurent(report: ResolutionReport, boundary: Iterable[str] = ()) -> LaurentPoly:
    """𝓛 of the coefficiented resolution."""
    boundary = frozenset(boundary)
    y_with, y_without = coefficients(report)
    total = LaurentPoly()
    for y, term in ((y_with, report.with_overlap), (y_without, report.without_overlap)):
        if not term.is_zero:
            total = total + y * laurent_of(term.element(), boundary)
    return total


def lhs_laurent(report: ResolutionReport, boundary: Iterable[str] = ()) -> LaurentPoly:
    """𝓛 of the graphs that were resolved."""
    boundary = frozenset(boundary)
    total = LaurentPoly.product(laurent_of(host.to_snake(), boundary) for host in report.hosts if host is not None)
    if None in report.hosts:
        total = total * edge_weight(report.notes.get('edge_label'), boundary)
    return total


@dataclass
class IdentityCheck:
    lhs: LaurentPoly
    rhs: LaurentPoly

    @property
    def diff(self) -> LaurentPoly:
        return self.lhs - self.rhs

    @property
    def ok(self) -> bool:
        return self.diff.is_zero()

    def describe(self) -> List[str]:
        lines = [f"lhs: {self.lhs}", f"rhs: {self.rhs}", f"identity: {'holds' if self.ok else 'FAILS'}"]
        if not self.ok:
            lines.append("diff:")
            lines.extend(f"  {line}" for line in self.diff.format_terms())
        return lines


def verify_identity(lhs: LaurentPoly, rhs: LaurentPoly) -> IdentityCheck:
    check = IdentityCheck(lhs, rhs)
    if not check.ok:
        logger.warning(f"Identity fails in {len(check.diff.terms)} monomials")
    return check


def verify_resolution(report: ResolutionReport, boundary: Iterable[str] = ()) -> IdentityCheck:
    return verify_identity(lhs_laurent(report, boundary), resolution_laurent(report, boundary))
