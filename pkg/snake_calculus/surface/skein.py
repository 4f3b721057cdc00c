"""
Skein relations checked on snake graphs of curves.

``skein_check`` resolves one crossing of two curves (or of a curve with itself)
and compares both sides of the Laurent identity. ``smooth`` keeps going: every
component of the result that still crosses itself is resolved again until only
arcs, loops and single edges are left.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..errors import ResolutionError, SurfaceError
from ..graphs.band import BandGraph
from ..graphs.base import NE, SW, side_of, tile_sign
from ..graphs.relement import canonical_form
from ..graphs.snake import EdgeGraph, SnakeGraph
from ..graphs.strand import Strand
from ..laurent.coefficients import IdentityCheck, coefficients, lhs_laurent, resolution_laurent, verify_identity
from ..laurent.expansion import laurent_of
from ..laurent.poly import LaurentPoly
from ..resolutions.grafting import self_graft
from ..resolutions.overlaps import (
    Overlap, find_pair_overlaps, find_self_overlaps, is_crossing_pair, is_self_crossing,
)
from ..resolutions.pair import resolve_pair
from ..resolutions.report import ResolutionReport
from ..resolutions.self_crossing import resolve_self
from .curves import build_labeled_snake, cluster_variable, loop_laurent, mutated_variable
from .grafts import GraftSite, edge_graft_sites, pair_graft_sites, self_graft_sites
from .triangulation import ArcSpec, LoopSpec, Triangulation

logger = logging.getLogger(__name__)

COMPATIBLE = 'compatible, nothing to smooth'


def _arc(surface: Triangulation, name: str) -> ArcSpec:
    curve = surface.curve(name)
    if not isinstance(curve, ArcSpec):
        raise SurfaceError(f"{name} is a loop; skein relations start from arcs")
    if curve.monogon or curve.kinks:
        raise SurfaceError(f"{name} is not in minimal position (kinks or monogon)")
    return curve


def crossing_overlaps(first: SnakeGraph, second: SnakeGraph) -> List[Overlap]:
    return [o for o in find_pair_overlaps(first, second) if is_crossing_pair(first, second, o)]


def self_crossing_overlaps(graph: SnakeGraph) -> List[Overlap]:
    return [o for o in find_self_overlaps(graph) if is_self_crossing(graph, o)]


def closing_sign(graph: SnakeGraph) -> Optional[int]:
    """Sign g for which the first tile's SW edge and the last tile's NE edge carry one label."""
    if not graph.is_labeled:
        return None
    strand = Strand.from_snake(graph)
    first, last = strand.cells[0], strand.cells[-1]
    matches = [g for g in (1, -1) if first.side((SW, g)) == last.side((NE, g))]
    if len(matches) != 1:
        return None
    return matches[0]


def graft_at_end(graph: SnakeGraph) -> Optional[ResolutionReport]:
    """Self-grafting at the last tile along the edge matching the start, when the curve closes up."""
    g = closing_sign(graph)
    if g is None:
        return None
    return self_graft(graph, graph.d, side_of((NE, g), tile_sign(graph.d)))


@dataclass
class SkeinCheck:
    """One smoothing: the resolution, its coefficients and the Laurent identity."""

    name: str
    report: Optional[ResolutionReport]
    check: IdentityCheck
    y_with: Optional[LaurentPoly] = None
    y_without: Optional[LaurentPoly] = None

    @property
    def ok(self) -> bool:
        return self.check.ok

    @property
    def signs(self) -> Tuple[int, int]:
        if self.report is None:
            return (1, 0)
        return (self.report.with_overlap.sign, self.report.without_overlap.sign)

    def describe(self) -> List[str]:
        lines = [f"skein {self.name}"]
        if self.report is None:
            lines.append(COMPATIBLE)
        else:
            lines.extend(self.report.describe())
            lines.append(f"Y1: {self.y_with}")
            lines.append(f"Y2: {self.y_without}")
            lines.append(f"signs: {'+' if self.signs[0] > 0 else '-'} {'+' if self.signs[1] >= 0 else '-'}")
        lines.extend(self.check.describe())
        return lines


def _checked(name: str, report: ResolutionReport, boundary) -> SkeinCheck:
    y_with, y_without = coefficients(report)
    check = verify_identity(lhs_laurent(report, boundary), resolution_laurent(report, boundary))
    return SkeinCheck(name, report, check, y_with, y_without)


def resolve_curves(surface: Triangulation, first: str, second: Optional[str] = None,
                   overlap: int = 0) -> Optional[ResolutionReport]:
    """Resolution of the ``overlap``-th crossing, ``None`` when the curves are compatible.

    Crossings carried by an overlap of the snake graphs come first; crossings
    at an end of a curve follow and are resolved by grafting.
    """
    g1 = build_labeled_snake(surface, _arc(surface, first))
    if second is None:
        if isinstance(g1, EdgeGraph):
            return None
        found = self_crossing_overlaps(g1)
        if found:
            return resolve_self(g1, _pick(found, overlap))
        report = graft_at_end(g1)
        if report is not None:
            return report
        return _graft(self_graft_sites(surface, g1), overlap)
    g2 = build_labeled_snake(surface, _arc(surface, second))
    if isinstance(g1, EdgeGraph) and isinstance(g2, EdgeGraph):
        return None
    if isinstance(g1, EdgeGraph) or isinstance(g2, EdgeGraph):
        edge, other = (g1, g2) if isinstance(g1, EdgeGraph) else (g2, g1)
        return _graft(edge_graft_sites(other, edge), overlap)
    found = crossing_overlaps(g1, g2)
    if found:
        return resolve_pair(g1, g2, _pick(found, overlap))
    return _graft(pair_graft_sites(surface, g1, g2), overlap)


def _pick(found: list, index: int):
    try:
        chosen = found[index]
    except IndexError:
        raise ResolutionError(f"Crossing {index} requested, {len(found)} crossings found")
    if len(found) > 1:
        logger.info(f"{len(found)} crossings; resolving number {index}")
    return chosen


def _graft(sites: List[GraftSite], index: int) -> Optional[ResolutionReport]:
    if not sites:
        return None
    site = _pick(sites, index)
    logger.debug(f"Grafting at tile {site.position}, segments {site.segments}")
    return site.resolve()


def skein_check(surface: Triangulation, first: str, second: Optional[str] = None, overlap: int = 0) -> SkeinCheck:
    """Smooth one crossing and verify x_C = Y1 x_C+ + Y2 x_C- exactly."""
    boundary = frozenset(surface.boundary)
    name = first if second is None else f"{first} x {second}"
    report = resolve_curves(surface, first, second, overlap)
    if report is None:
        product = LaurentPoly.product(cluster_variable(surface, _arc(surface, n)) for n in filter(None, (first, second)))
        return SkeinCheck(name, None, verify_identity(product, product))
    logger.debug(f"Skein {name}: {report.case}")
    return _checked(name, report, boundary)


@dataclass(frozen=True)
class SmoothTerm:
    """``sign * coefficient * product of components``."""

    coefficient: LaurentPoly
    sign: int
    components: Tuple[object, ...]


def _resolution_of(component, surface: Triangulation) -> Optional[ResolutionReport]:
    if not isinstance(component, SnakeGraph) or not component.is_labeled:
        return None
    report = graft_at_end(component)
    if report is not None:
        return report
    found = self_crossing_overlaps(component)
    if found:
        return resolve_self(component, found[0])
    return _graft(self_graft_sites(surface, component), 0)


def _expand(term: SmoothTerm, surface: Triangulation) -> Optional[List[SmoothTerm]]:
    for index, component in enumerate(term.components):
        report = _resolution_of(component, surface)
        if report is None:
            continue
        rest = term.components[:index] + term.components[index + 1:]
        y_with, y_without = coefficients(report)
        expanded = []
        for y, summand in ((y_with, report.with_overlap), (y_without, report.without_overlap)):
            if summand.is_zero:
                continue
            expanded.append(SmoothTerm(term.coefficient * y, term.sign * summand.sign,
                                       rest[:index] + summand.components() + rest[index:]))
        return expanded
    return None


@dataclass
class Smoothing:
    """A product of two curves written as a sum of products of curves without crossings."""

    name: str
    lhs: LaurentPoly
    terms: List[SmoothTerm] = field(default_factory=list)
    names: Dict[str, str] = field(default_factory=dict)

    def rhs(self, boundary) -> LaurentPoly:
        total = LaurentPoly()
        for term in self.terms:
            total = total + term.coefficient * term.sign * LaurentPoly.product(
                laurent_of(c, boundary) for c in term.components)
        return total

    def bands(self) -> List[BandGraph]:
        return [c for term in self.terms for c in term.components if isinstance(c, BandGraph)]


def _cyclic_rotations(labels: Tuple[str, ...]) -> List[Tuple[str, ...]]:
    return [labels[k:] + labels[:k] for k in range(len(labels))]


def bracelet_name(band: BandGraph, surface: Triangulation) -> Optional[str]:
    """``Brac_k(loop)`` when the band's tile labels repeat a declared loop k times."""
    labels = band.tile_labels()
    if labels is None:
        return None
    for name, curve in sorted(surface.curves.items()):
        if not isinstance(curve, LoopSpec) or not curve.crossings:
            continue
        n = len(curve.crossings)
        if len(labels) % n:
            continue
        k = len(labels) // n
        repeated = tuple(curve.crossings) * k
        rotations = _cyclic_rotations(repeated) + _cyclic_rotations(tuple(reversed(repeated)))
        if labels in rotations:
            return name if k == 1 else f"Brac_{k}({name})"
    return None


def component_name(component, surface: Triangulation) -> str:
    boundary = set(surface.boundary)
    if isinstance(component, EdgeGraph):
        return '1' if component.label in boundary else f"x{component.label}"
    if isinstance(component, BandGraph):
        return bracelet_name(component, surface) or canonical_form(component)
    form = canonical_form(component)
    for name, curve in sorted(surface.curves.items()):
        if isinstance(curve, ArcSpec) and curve.crossings and not curve.kinks and not curve.monogon:
            if canonical_form(build_labeled_snake(surface, curve)) == form:
                return name
    return form


def smooth(surface: Triangulation, first: str, second: str, overlap: int = 0, max_steps: int = 64) -> Smoothing:
    """Resolve the crossing of two arcs, then every self-crossing the pieces still have."""
    boundary = frozenset(surface.boundary)
    report = resolve_curves(surface, first, second, overlap)
    name = f"{first} x {second}"
    if report is None:
        components = tuple(build_labeled_snake(surface, _arc(surface, n)) for n in (first, second))
        lhs = LaurentPoly.product(laurent_of(c, boundary) for c in components)
        return Smoothing(name, lhs, [SmoothTerm(LaurentPoly.constant(1), 1, components)])

    y_with, y_without = coefficients(report)
    pending = [SmoothTerm(y, summand.sign, summand.components())
               for y, summand in ((y_with, report.with_overlap), (y_without, report.without_overlap))
               if not summand.is_zero]
    done: List[SmoothTerm] = []
    steps = 0
    while pending:
        term = pending.pop(0)
        expanded = _expand(term, surface)
        if expanded is None:
            done.append(term)
            continue
        steps += 1
        if steps > max_steps:
            raise ResolutionError(f"Smoothing {name} did not finish within {max_steps} resolutions")
        pending = expanded + pending
    smoothing = Smoothing(name, lhs_laurent(report, boundary), done)
    for term in done:
        for component in term.components:
            smoothing.names[canonical_form(component)] = component_name(component, surface)
    logger.info(f"Smoothed {name} into {len(done)} terms after {steps} further resolutions")
    return smoothing


def format_smoothing(smoothing: Smoothing, boundary) -> List[str]:
    lines = [f"smoothing {smoothing.name}"]
    for term in smoothing.terms:
        names = sorted(smoothing.names[canonical_form(c)] for c in term.components)
        factors = [n for n in names if n != '1'] or ['1']
        coefficient = '' if term.coefficient == LaurentPoly.constant(1) else f"{term.coefficient} * "
        lines.append(f"{'+' if term.sign > 0 else '-'} {coefficient}{' * '.join(factors)}")
    check = verify_identity(smoothing.lhs, smoothing.rhs(boundary))
    lines.extend(check.describe())
    return lines


@dataclass
class TorusIdentity:
    """The smoothed product of the two torus arcs against the closed formula
    ``(B x2 + y1y3 xz + y1y3y4 x2) xz x2 + y1^2 y3^2 y4^2 x1' x3``, where ``B``
    is the band graph that wraps twice around the loop."""

    smoothing: Smoothing
    engine: IdentityCheck
    formula: IdentityCheck
    flip: IdentityCheck

    @property
    def ok(self) -> bool:
        return self.engine.ok and self.formula.ok and self.flip.ok

    def describe(self, boundary) -> List[str]:
        lines = format_smoothing(self.smoothing, boundary)
        lines.append(f"closed formula: {'holds' if self.formula.ok else 'FAILS'}")
        lines.append(f"flipped arc against exchange relation: {'holds' if self.flip.ok else 'FAILS'}")
        return lines


def torus_identity(surface: Triangulation, first: str = 'gamma1', second: str = 'gamma2',
                   loop: str = 'zeta', flipped: str = 'flip1') -> TorusIdentity:
    """Smooth the two arcs at their last crossing overlap and compare with the closed formula."""
    boundary = frozenset(surface.boundary)
    g1 = build_labeled_snake(surface, _arc(surface, first))
    g2 = build_labeled_snake(surface, _arc(surface, second))
    found = crossing_overlaps(g1, g2)
    if not found:
        raise ResolutionError(f"{first} and {second} do not cross")
    smoothing = smooth(surface, first, second, overlap=len(found) - 1)
    engine = verify_identity(smoothing.lhs, smoothing.rhs(boundary))

    loop_spec = surface.curve(loop)
    if not isinstance(loop_spec, LoopSpec):
        raise SurfaceError(f"{loop} is not a loop")
    bracelets = [band for band in smoothing.bands() if bracelet_name(band, surface) == f"Brac_2({loop})"]
    if not bracelets:
        raise ResolutionError(f"Smoothing produced no band wrapping twice around {loop}")

    def x(label: str) -> LaurentPoly:
        return LaurentPoly.variable(f"x{label}")

    def y(*labels: str) -> LaurentPoly:
        return LaurentPoly.product(LaurentPoly.variable(f"y{label}") for label in labels)

    zeta = loop_laurent(surface, loop_spec)
    brac = laurent_of(bracelets[0], boundary)
    flip = cluster_variable(surface, _arc(surface, flipped))
    expected = ((brac * x('2') + y('1', '3') * zeta + y('1', '3', '4') * x('2')) * zeta * x('2')
                + y('1', '1', '3', '3', '4', '4') * flip * x('3'))
    formula = verify_identity(smoothing.lhs, expected)
    flip_check = verify_identity(flip, mutated_variable(surface, '1'))
    return TorusIdentity(smoothing, engine, formula, flip_check)
