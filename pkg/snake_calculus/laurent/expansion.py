"""
Weights, heights and the Laurent polynomial of labeled graphs.

Edge labels become ``x<label>`` and tile labels ``y<label>``; edges whose label
is in ``boundary`` weigh 1.
"""

import logging
from functools import lru_cache
from typing import FrozenSet, Iterable, List, Optional

from ..errors import GraphError
from ..graphs.band import BandGraph, strand_of_band
from ..graphs.relement import RElement
from ..graphs.snake import EdgeGraph, EdgeRef, SnakeGraph
from ..graphs.strand import Strand
from ..matchings.good import band_cuts
from ..matchings.host import HostGraph
from ..matchings.perfect import enclosed_in_host, sweep
from .poly import LaurentPoly

logger = logging.getLogger(__name__)


def x_var(label: str) -> str:
    return f"x{label}"


def y_var(label: str) -> str:
    return f"y{label}"


def edge_weight(label: Optional[str], boundary: FrozenSet[str] = frozenset()) -> LaurentPoly:
    if label is None:
        raise GraphError("Laurent expansion needs every edge labeled")
    if label in boundary:
        return LaurentPoly.constant(1)
    return LaurentPoly.variable(x_var(label))


def edge_label(host: HostGraph, ref: EdgeRef) -> Optional[str]:
    j, key = host.incidences[ref][0]
    return host.strand.cells[j - 1].side(key)


def weight(host: HostGraph, edges: Iterable[EdgeRef], boundary: FrozenSet[str] = frozenset()) -> LaurentPoly:
    """x(P): the product of the edge weights of a matching."""
    return LaurentPoly.product(edge_weight(edge_label(host, ref), boundary) for ref in edges)


def tile_monomial(labels: Iterable[Optional[str]], variable=y_var) -> LaurentPoly:
    factors = []
    for label in labels:
        if label is None:
            raise GraphError("Laurent expansion needs every tile labeled")
        factors.append(LaurentPoly.variable(variable(label)))
    return LaurentPoly.product(factors)


def height(host: HostGraph, edges: FrozenSet[EdgeRef], minimal: Optional[FrozenSet[EdgeRef]] = None) -> LaurentPoly:
    """y(P): the y-variables of the tiles enclosed by ``P ⊖ P-``."""
    minimal = host.minimal_edges() if minimal is None else minimal
    tiles = enclosed_in_host(host, edges, minimal)
    return tile_monomial(host.strand.cells[j - 1].label for j in tiles)


def _tile_weight(strand: Strand) -> LaurentPoly:
    return tile_monomial((cell.label for cell in strand.cells), x_var)


def snake_laurent(graph: SnakeGraph, boundary: FrozenSet[str] = frozenset()) -> LaurentPoly:
    return _snake_laurent(graph, frozenset(boundary))


@lru_cache(maxsize=None)
def _snake_laurent(graph: SnakeGraph, boundary: FrozenSet[str]) -> LaurentPoly:
    if not graph.is_labeled:
        raise GraphError(f"Snake graph {graph.word() or '(one tile)'} is not labeled")
    host = HostGraph(Strand.from_snake(graph))
    minimal = host.minimal_edges()
    total = LaurentPoly()
    for edges in sweep(host):
        total = total + weight(host, edges, boundary) * height(host, edges, minimal)
    return total / _tile_weight(host.strand)


def band_height(cuts, edges: FrozenSet[EdgeRef]) -> LaurentPoly:
    """Height of a good matching, read off the cut along the glued edge when possible."""
    heights: List[LaurentPoly] = []
    for cut in reversed(cuts):
        lifted = cut.lift(edges)
        if lifted is not None:
            heights.append(height(cut.host, lifted))
    if not heights:
        raise GraphError("Matching of band graph is not good")
    if len(set(heights)) > 1:
        logger.warning(f"Band matching has heights {sorted(map(str, set(heights)))} over its cuts; using {heights[0]}")
    return heights[0]


def band_laurent(band: BandGraph, boundary: FrozenSet[str] = frozenset()) -> LaurentPoly:
    return _band_laurent(band, frozenset(boundary))


@lru_cache(maxsize=None)
def _band_laurent(band: BandGraph, boundary: FrozenSet[str]) -> LaurentPoly:
    if not band.is_labeled:
        raise GraphError(f"Band graph {band.word() or '(one tile)'} is not labeled")
    host = HostGraph(strand_of_band(band))
    cuts = band_cuts(host)
    total = LaurentPoly()
    for edges in sweep(host):
        if not any(cut.lift(edges) is not None for cut in cuts):
            continue
        total = total + weight(host, edges, boundary) * band_height(cuts, edges)
    return total / _tile_weight(host.strand)


def laurent_of(item, boundary: Iterable[str] = ()) -> LaurentPoly:
    """The Laurent polynomial of a labeled component or of a formal sum of unions."""
    boundary = frozenset(boundary)
    if isinstance(item, RElement):
        total = LaurentPoly()
        for coefficient, components in item.terms():
            total = total + coefficient * LaurentPoly.product(laurent_of(c, boundary) for c in components)
        return total
    if isinstance(item, EdgeGraph):
        return edge_weight(item.label, boundary)
    if isinstance(item, BandGraph):
        return band_laurent(item, boundary)
    if isinstance(item, SnakeGraph):
        return snake_laurent(item, boundary)
    raise TypeError(f"Cannot expand {item!r}")
