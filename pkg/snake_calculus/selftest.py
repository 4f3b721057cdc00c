"""
Exhaustive self-test suites.

Each suite checks one family of identities over every small instance up to the
tile bounds from the configuration and returns a :class:`SuiteResult`.
Independent suites run on a thread pool.
"""

import itertools
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Tuple

from .config_manager import ConfigManager
from .errors import ResolutionError, SnakeCalculusError
from .graphs.band import glue_band
from .graphs.base import Side
from .graphs.snake import EdgeGraph, EdgeRef, SnakeGraph, build_snake
from .laurent.coefficients import verify_resolution
from .matchings.counting import count_component, count_relement
from .matchings.good import enumerate_good_matchings, good_matchings_by_cuts
from .resolutions.grafting import graft_pair, self_graft
from .resolutions.overlaps import find_pair_overlaps, find_self_overlaps, is_crossing_pair, is_self_crossing
from .resolutions.pair import resolve_pair
from .resolutions.self_crossing import resolve_self
from .surface.curves import build_labeled_snake, cluster_variable
from .surface.grafts import edge_graft_sites, pair_graft_sites, self_graft_sites
from .surface.skein import crossing_overlaps, self_crossing_overlaps, torus_identity
from .surface.triangulation import ArcSpec, Triangulation, fixture_path, is_boundary_id, load_surface

logger = logging.getLogger(__name__)

FIXTURES = ('torus', 'annulus', 'annulus2')


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: int = 0
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def summary(self) -> str:
        return f"{self.name}: {self.checked} checked, {self.failures} failures"


def all_snakes(max_tiles: int) -> Iterator[SnakeGraph]:
    """Every snake graph with at most ``max_tiles`` tiles, by step word."""
    for d in range(1, max_tiles + 1):
        for word in itertools.product('RU', repeat=d - 1):
            yield build_snake(word)


def surface_walks(surface: Triangulation, max_crossings: int) -> Iterator[ArcSpec]:
    """Crossing sequences of at most ``max_crossings`` arcs from every triangle."""

    def extend(start: int, triangle: int, crossings: Tuple[str, ...]) -> Iterator[ArcSpec]:
        if crossings:
            yield ArcSpec(f"walk{start}:{' '.join(crossings)}", start, crossings)
        if len(crossings) == max_crossings:
            return
        for arc in surface.triangle(triangle):
            if is_boundary_id(arc) or (crossings and arc == crossings[-1]):
                continue
            yield from extend(start, surface.across(triangle, arc), crossings + (arc,))

    for start in range(1, len(surface.triangles) + 1):
        yield from extend(start, start, ())


def _fixtures() -> List[Triangulation]:
    return [load_surface(fixture_path(name)) for name in FIXTURES]


def pair_counting(config: ConfigManager, result: SuiteResult) -> None:
    graphs = list(all_snakes(config.get('engine.max_tiles', 5)))
    for first, second in itertools.product(graphs, repeat=2):
        expected = count_component(first) * count_component(second)
        for overlap in crossing_overlaps(first, second):
            result.checked += 1
            report = resolve_pair(first, second, overlap)
            if count_relement(report.result) != expected:
                result.failures += 1
                logger.warning(f"Pair count fails for {first.word()} / {second.word()} at {overlap}")


def self_counting(config: ConfigManager, result: SuiteResult) -> None:
    for graph in all_snakes(config.get('engine.self_max_tiles', 7)):
        expected = count_component(graph)
        for overlap in self_crossing_overlaps(graph):
            result.checked += 1
            try:
                report = resolve_self(graph, overlap)
            except ResolutionError as e:
                result.failures += 1
                logger.warning(f"Self-crossing of {graph.word()} at {overlap} does not resolve: {e}")
                continue
            if count_relement(report.result) != expected:
                result.failures += 1
                logger.warning(f"Self-crossing count fails for {graph.word()} at {overlap} ({report.case})")


def _graft_positions(graph: SnakeGraph) -> Iterator[Tuple[int, object]]:
    for s in range(1, graph.d):
        yield s, None
    yield graph.d, Side.N
    yield graph.d, Side.E


def graft_counting(config: ConfigManager, result: SuiteResult) -> None:
    graphs = list(all_snakes(config.get('engine.graft_max_tiles', 5)))
    for first in graphs:
        m1 = count_component(first)
        for s, delta3 in _graft_positions(first):
            result.checked += 1
            if count_relement(graft_pair(first, EdgeGraph(), s).result) != m1:
                result.failures += 1
                logger.warning(f"Edge grafting count fails for {first.word()} at {s}")
            result.checked += 1
            if count_relement(self_graft(first, s, delta3).result) != m1:
                result.failures += 1
                logger.warning(f"Self-grafting count fails for {first.word()} at {s} {delta3}")
            for second in graphs:
                result.checked += 1
                report = graft_pair(first, second, s, delta3)
                if count_relement(report.result) != m1 * count_component(second):
                    result.failures += 1
                    logger.warning(f"Grafting count fails for {first.word()} / {second.word()} at {s} {delta3}")


def labeled_identities(config: ConfigManager, result: SuiteResult) -> None:
    bound = min(config.get('engine.max_tiles', 5), 4)
    for surface in _fixtures():
        boundary = frozenset(surface.boundary)
        graphs = [build_labeled_snake(surface, arc) for arc in surface_walks(surface, bound)]
        for first, second in itertools.combinations(graphs, 2):
            for overlap in crossing_overlaps(first, second):
                _check_identity(result, lambda: resolve_pair(first, second, overlap), boundary)
            for site in pair_graft_sites(surface, first, second):
                _check_identity(result, site.resolve, boundary)
        for graph in graphs:
            for overlap in self_crossing_overlaps(graph):
                _check_identity(result, lambda: resolve_self(graph, overlap), boundary)
            for site in self_graft_sites(surface, graph):
                _check_identity(result, site.resolve, boundary)
            for arc in sorted(set(graph.tile_labels)):
                for site in edge_graft_sites(graph, EdgeGraph(arc)):
                    _check_identity(result, site.resolve, boundary)


def _check_identity(result: SuiteResult, resolve: Callable, boundary) -> None:
    result.checked += 1
    try:
        report = resolve()
        check = verify_resolution(report, boundary)
    except SnakeCalculusError as e:
        result.failures += 1
        logger.warning(f"Labeled resolution raised: {e}")
        return
    if not check.ok:
        result.failures += 1
        logger.warning(f"Labeled identity fails for {report.case}: {report.notes}")


def torus_golden(config: ConfigManager, result: SuiteResult) -> None:
    result.checked += 1
    identity = torus_identity(load_surface(fixture_path('torus')))
    if not identity.ok:
        result.failures += 1
        logger.warning("Torus identity fails")


def good_matchings(config: ConfigManager, result: SuiteResult) -> None:
    for graph in all_snakes(config.get('engine.band_max_tiles', 5)):
        for glue in (Side.S, Side.W):
            band = glue_band(graph, EdgeRef(1, glue))
            result.checked += 1
            filtered = {m.edges for m in enumerate_good_matchings(band)}
            if filtered != good_matchings_by_cuts(band):
                result.failures += 1
                logger.warning(f"Good matchings disagree for band {graph.word()} glued at {glue.value}")


def sign_independence(config: ConfigManager, result: SuiteResult) -> None:
    graphs = list(all_snakes(config.get('engine.max_tiles', 5)))
    for first, second in itertools.product(graphs, repeat=2):
        for overlap in find_pair_overlaps(first, second):
            result.checked += 1
            try:
                is_crossing_pair(first, second, overlap)
            except ResolutionError:
                result.failures += 1
    for graph in all_snakes(config.get('engine.self_max_tiles', 7)):
        for overlap in find_self_overlaps(graph):
            result.checked += 1
            try:
                is_self_crossing(graph, overlap)
            except ResolutionError:
                result.failures += 1


def positivity(config: ConfigManager, result: SuiteResult) -> None:
    bound = config.get('engine.max_tiles', 5)
    for surface in _fixtures():
        for arc in surface_walks(surface, bound):
            result.checked += 1
            value = cluster_variable(surface, arc)
            if not value.terms or any(c <= 0 for c in value.terms.values()):
                result.failures += 1
                logger.warning(f"Non-positive expansion for {arc.name}")


SUITES: Dict[str, Callable[[ConfigManager, SuiteResult], None]] = {
    'pair-counting': pair_counting,
    'self-counting': self_counting,
    'graft-counting': graft_counting,
    'labeled-identities': labeled_identities,
    'torus-golden': torus_golden,
    'good-matchings': good_matchings,
    'sign-independence': sign_independence,
    'positivity': positivity,
}


def run_suite(name: str, config: ConfigManager) -> SuiteResult:
    result = SuiteResult(name)
    start = time.monotonic()
    try:
        SUITES[name](config, result)
    except SnakeCalculusError as e:
        result.failures += 1
        logger.error(f"Suite {name} aborted: {e}")
    result.elapsed = time.monotonic() - start
    logger.info(f"{result.summary()} in {result.elapsed:.2f}s")
    return result


def run_selftest(config: ConfigManager, names: List[str] = None) -> List[SuiteResult]:
    """Run the named suites (all by default); results come back in suite order."""
    names = list(SUITES) if names is None else names
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise ValueError(f"Unknown suites: {', '.join(unknown)}")
    workers = max(1, config.get('engine.workers', 1))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda name: run_suite(name, config), names))
