"""
Labeled snake and band graphs of curves, and their cluster variables.

Tile j of a curve is the quadrilateral around the j-th crossed arc. With
``before`` and ``after`` the triangles on either side of that crossing, the
cell is keyed as::

    (SW, +) = succ(before)   (SW, -) = pred(before)
    (NE, +) = pred(after)    (NE, -) = succ(after)

so the quadrilateral sides to the right of the curve carry sign +.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ..errors import SurfaceError
from ..graphs.band import BandGraph, band_of_strand
from ..graphs.snake import EdgeGraph, SnakeGraph
from ..graphs.strand import Cell, Strand
from ..laurent.expansion import band_laurent, edge_weight, snake_laurent, x_var, y_var
from ..laurent.poly import LaurentPoly
from ..resolutions.overlaps import OverlapDirection
from .triangulation import ArcSpec, LoopSpec, Triangulation

logger = logging.getLogger(__name__)


def _cell(surface: Triangulation, arc: str, before: int, after: int) -> Cell:
    sides = (surface.succ(before, arc), surface.pred(before, arc),
             surface.pred(after, arc), surface.succ(after, arc))
    return Cell(arc, sides)


def _joint(surface: Triangulation, triangle: int, entering: str, leaving: str) -> int:
    """Sign of the side shared by two consecutive tiles."""
    shared = surface.third(triangle, entering, leaving)
    return 1 if shared == surface.pred(triangle, entering) else -1


def _strand(surface: Triangulation, start: int, crossings: Sequence[str], kappa: int) -> Tuple[Strand, List[int]]:
    crossings = tuple(crossings)
    visited = surface.walk(start, crossings)
    cells = tuple(_cell(surface, arc, visited[j], visited[j + 1]) for j, arc in enumerate(crossings))
    joints = tuple(_joint(surface, visited[j], crossings[j - 1], crossings[j]) for j in range(1, len(crossings)))
    return Strand(cells, joints, kappa), visited


def build_strand(surface: Triangulation, arc: ArcSpec) -> Strand:
    if not arc.crossings:
        raise SurfaceError(f"Arc {arc.name} crosses no arc of the triangulation")
    if arc.rel not in (1, -1):
        raise SurfaceError(f"Relative orientation of {arc.name} must be +1 or -1, got {arc.rel}")
    strand, _ = _strand(surface, arc.start, arc.crossings, arc.rel)
    return strand


def build_labeled_snake(surface: Triangulation, arc: ArcSpec):
    """Labeled snake graph of an arc; an arc of the triangulation gives a single edge."""
    if arc.arc is not None:
        if arc.crossings:
            raise SurfaceError(f"Arc {arc.name} is the arc {arc.arc} and cannot cross anything")
        return EdgeGraph(arc.arc)
    graph = build_strand(surface, arc).to_snake()
    logger.debug(f"Arc {arc.name}: {graph.d} tiles, steps {graph.word() or '-'}")
    return graph


def loop_strand(surface: Triangulation, loop: LoopSpec) -> Strand:
    crossings = loop.crossings
    if not crossings:
        raise SurfaceError(f"Loop {loop.name} is contractible and has no band graph")
    if len(crossings) > 1 and crossings[0] == crossings[-1]:
        raise SurfaceError(f"Loop {loop.name} crosses arc {crossings[0]} twice in a row")
    strand, visited = _strand(surface, loop.base, crossings, 1)
    if visited[-1] != loop.base:
        raise SurfaceError(f"Loop {loop.name} ends in triangle {visited[-1]}, not at its base {loop.base}")
    closing = _joint(surface, loop.base, crossings[-1], crossings[0])
    return strand.closed(closing)


def build_labeled_band(surface: Triangulation, loop: LoopSpec) -> BandGraph:
    if loop.kinks:
        raise SurfaceError(f"Loop {loop.name} has kinks; evaluate it with loop_laurent")
    band = band_of_strand(loop_strand(surface, loop))
    logger.debug(f"Loop {loop.name}: band graph with {band.d} tiles")
    return band


def crossing_monomial(arc: ArcSpec) -> LaurentPoly:
    """cross(T, γ): the product of the crossed arcs' variables."""
    return LaurentPoly.product(LaurentPoly.variable(x_var(label)) for label in arc.crossings)


def _kink_sign(kinks: int) -> int:
    return -1 if kinks % 2 else 1


def cluster_variable(surface: Triangulation, arc: ArcSpec) -> LaurentPoly:
    """x_γ as a Laurent polynomial in the initial cluster."""
    if arc.monogon:
        return LaurentPoly()
    boundary = frozenset(surface.boundary)
    if arc.arc is not None:
        value = edge_weight(arc.arc, boundary)
    else:
        value = snake_laurent(build_labeled_snake(surface, arc), boundary)
    return value * _kink_sign(arc.kinks)


def loop_laurent(surface: Triangulation, loop: LoopSpec) -> LaurentPoly:
    if not loop.crossings:
        return LaurentPoly.constant(-2) * _kink_sign(loop.kinks)
    band = band_of_strand(loop_strand(surface, loop))
    return band_laurent(band, frozenset(surface.boundary)) * _kink_sign(loop.kinks)


def curve_laurent(surface: Triangulation, name: str) -> LaurentPoly:
    curve = surface.curve(name)
    if isinstance(curve, LoopSpec):
        return loop_laurent(surface, curve)
    return cluster_variable(surface, curve)


def f_polynomial(surface: Triangulation, arc: ArcSpec) -> LaurentPoly:
    """x_γ with every x specialized to 1."""
    return cluster_variable(surface, arc).specialize('x')


def exchange_relation(surface: Triangulation, arc: str) -> Tuple[LaurentPoly, LaurentPoly]:
    """The two monomials of ``x_k x_k' ``: the y_k one first."""
    if arc not in surface.arcs:
        raise SurfaceError(f"{arc} is not an arc of the triangulation")
    matrix = surface.exchange_matrix()
    positive: Dict[str, int] = {}
    negative: Dict[str, int] = {}
    for other in surface.arcs:
        b = matrix[other][arc]
        if b > 0:
            positive[x_var(other)] = b
        elif b < 0:
            negative[x_var(other)] = -b
    positive[y_var(arc)] = 1
    return LaurentPoly.monomial(positive), LaurentPoly.monomial(negative)


def mutated_variable(surface: Triangulation, arc: str) -> LaurentPoly:
    """x_k' after flipping arc k, from the exchange relation."""
    first, second = exchange_relation(surface, arc)
    return (first + second) / LaurentPoly.variable(x_var(arc))


@dataclass(frozen=True)
class LocalOverlap:
    """Maximal common run of two crossing sequences, 1-based and inclusive."""

    s: int
    t: int
    s_prime: int
    t_prime: int
    direction: OverlapDirection


def local_overlaps(first: Sequence[str], second: Sequence[str]) -> List[LocalOverlap]:
    """Maximal runs shared by two crossing sequences, read forwards or against each other."""
    found = []
    for direction in OverlapDirection:
        other = tuple(second) if direction is OverlapDirection.SAME else tuple(reversed(second))
        n, m = len(first), len(other)
        for i in range(n):
            for k in range(m):
                if first[i] != other[k] or (i > 0 and k > 0 and first[i - 1] == other[k - 1]):
                    continue
                length = 0
                while i + length < n and k + length < m and first[i + length] == other[k + length]:
                    length += 1
                u, v = k + 1, k + length
                if direction is OverlapDirection.OPPOSITE:
                    u, v = m + 1 - v, m + 1 - u
                found.append(LocalOverlap(i + 1, i + length, u, v, direction))
    return sorted(found, key=lambda o: (o.s, o.t, o.s_prime, o.t_prime, o.direction.value))


def realizes(surface: Triangulation, graph: SnakeGraph, start: int, crossings: Sequence[str],
             rel: Optional[int] = None) -> bool:
    """Whether a labeled snake graph is the graph of the curve with these crossings."""
    try:
        strand = build_strand(surface, ArcSpec('candidate', start, tuple(crossings), rel or graph.rel))
    except SurfaceError:
        return False
    ours = Strand.from_snake(graph)
    theirs = Strand.from_snake(strand.to_snake())
    return ours.joints == theirs.joints and [c.sides for c in ours.cells] == [c.sides for c in theirs.cells] \
        and [c.label for c in ours.cells] == [c.label for c in theirs.cells]


def find_realization(surface: Triangulation, graph: SnakeGraph) -> Optional[int]:
    """A start triangle from which the graph's tile labels walk to exactly this graph."""
    crossings = graph.tile_labels or ()
    for start in surface.triangles_of(crossings[0]) if crossings else ():
        if realizes(surface, graph, start, crossings):
            return start
    return None
