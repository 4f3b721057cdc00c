import itertools
from collections import Counter
from pathlib import Path

import pytest

from snake_calculus.errors import ParseError, ResolutionError, SurfaceError
from snake_calculus.graphs import EdgeGraph, strand_of_band
from snake_calculus.laurent import (
    LaurentPoly, height, laurent_of, lhs_laurent, resolution_laurent, verify_resolution, weight, x_var,
)
from snake_calculus.matchings import HostGraph, count_component, count_relement
from snake_calculus.matchings.good import band_cuts
from snake_calculus.matchings.perfect import sweep
from snake_calculus.resolutions import OverlapDirection, resolve_pair, resolve_self
from snake_calculus.surface import (
    ArcSpec, build_labeled_band, build_labeled_snake, cluster_variable, component_name, crossing_monomial,
    crossing_overlaps, curve_laurent, exchange_relation, f_polynomial, find_realization, fixture_path,
    format_smoothing, local_overlaps, mutated_variable, pair_graft_sites, parse_surface, self_crossing_overlaps,
    self_graft_sites, skein_check, smooth, torus_identity,
)
from snake_calculus.selftest import surface_walks

x = LaurentPoly.variable

GOLDEN = Path(__file__).parent / 'golden'


def test_fixtures_parse(torus, annulus):
    assert torus.arcs == ['1', '2', '3', '4']
    assert torus.boundary == ['b']
    assert annulus.boundary == ['bi', 'bo']
    assert fixture_path('torus').name == 'torus.txt'
    with pytest.raises(SurfaceError):
        fixture_path('sphere')


def test_exchange_matrix_is_skew_symmetric(torus, annulus):
    for surface in (torus, annulus):
        b = surface.exchange_matrix()
        for i, j in itertools.product(surface.arcs, repeat=2):
            assert b[i][j] == -b[j][i]
            assert b[i][j] in (-2, -1, 0, 1, 2)
    assert torus.exchange_matrix()['1']['2'] == 2
    assert annulus.exchange_matrix()['2']['1'] == 2


def test_annulus_arcs(annulus):
    flip2 = cluster_variable(annulus, annulus.curve('flip2'))
    flip1 = cluster_variable(annulus, annulus.curve('flip1'))
    assert flip2 == (x('x1') ** 2 + x('y2')) / x('x2')
    assert flip1 == (1 + x('y1') * x('x2') ** 2) / x('x1')
    assert flip2 == mutated_variable(annulus, '2')
    assert flip1 == mutated_variable(annulus, '1')
    assert f_polynomial(annulus, annulus.curve('flip2')) == 1 + x('y2')


def test_torus_flip_follows_the_exchange_relation(torus):
    assert exchange_relation(torus, '1') == (x('x3') * x('x4') * x('y1'), x('x2') ** 2)
    expected = (x('x2') ** 2 + x('y1') * x('x3') * x('x4')) / x('x1')
    assert curve_laurent(torus, 'flip1') == expected == mutated_variable(torus, '1')
    with pytest.raises(SurfaceError):
        exchange_relation(torus, 'b')


def test_expansions_have_positive_coefficients(torus, annulus):
    for surface in (torus, annulus):
        for arc in surface_walks(surface, 3):
            value = cluster_variable(surface, arc)
            assert value.terms
            assert all(c > 0 for c in value.terms.values())


def test_crossing_monomial_is_the_denominator(torus):
    gamma2 = torus.curve('gamma2')
    assert crossing_monomial(gamma2) == x('x3') * x('x4')
    value = cluster_variable(torus, gamma2) * crossing_monomial(gamma2)
    assert all(exp >= 0 for monomial in value.terms for _, exp in monomial)


def test_loops(torus, annulus):
    assert build_labeled_band(torus, torus.curve('zeta')).d == 3
    assert build_labeled_band(annulus, annulus.curve('core')).d == 2
    assert curve_laurent(annulus, 'trivial') == -2
    core = curve_laurent(annulus, 'core')
    assert all(c > 0 for c in core.terms.values())


def test_special_arcs():
    surface = parse_surface(
        "triangle: 1 bo 2\n"
        "triangle: 2 1 bi\n"
        "arc same: is=2\n"
        "arc bent: start=1 2 kinks=1\n"
        "arc lonely: monogon\n"
    )
    assert build_labeled_snake(surface, surface.curve('same')) == EdgeGraph('2')
    assert cluster_variable(surface, surface.curve('same')) == x('x2')
    assert cluster_variable(surface, surface.curve('bent')) == -((x('x1') ** 2 + x('y2')) / x('x2'))
    assert cluster_variable(surface, surface.curve('lonely')).is_zero()


@pytest.mark.parametrize('text, error', [
    ("triangle: 1 1 2\n", SurfaceError),
    ("triangle: 1 2 3\n", SurfaceError),
    ("triangle: 1 2\n", ParseError),
    ("triangle: 1 b 2\ntriangle: 2 1 c\nboundary: b\n", SurfaceError),
    ("triangle: 1 b 2\ntriangle: 2 1 c\nsquare: 1\n", ParseError),
    ("triangle: 1 b 2\ntriangle: 2 1 c\narc a: start=x 1\n", ParseError),
    ("# nothing\n", ParseError),
])
def test_bad_surfaces(text, error):
    with pytest.raises(error):
        parse_surface(text, 'bad.txt')


def test_bad_curves(annulus):
    with pytest.raises(SurfaceError):
        build_labeled_snake(annulus, ArcSpec('nowhere', 1, ('3',)))
    with pytest.raises(SurfaceError):
        build_labeled_snake(annulus, ArcSpec('stutter', 1, ('2', '2')))
    with pytest.raises(SurfaceError):
        build_labeled_snake(annulus, ArcSpec('outside', 1, ('bo',)))
    with pytest.raises(SurfaceError):
        annulus.curve('missing')


def test_local_overlaps_match_the_crossing_overlaps(torus):
    gamma1, gamma2 = torus.curve('gamma1'), torus.curve('gamma2')
    same = [(o.s, o.t, o.s_prime, o.t_prime) for o in local_overlaps(gamma1.crossings, gamma2.crossings)
            if o.direction is OverlapDirection.SAME]
    assert same == [(2, 3, 1, 2), (5, 6, 1, 2)]
    g1 = build_labeled_snake(torus, gamma1)
    g2 = build_labeled_snake(torus, gamma2)
    assert [(o.s, o.t, o.s_prime, o.t_prime) for o in crossing_overlaps(g1, g2)] == same


def test_snakes_of_curves_are_realized(torus):
    graph = build_labeled_snake(torus, torus.curve('gamma2'))
    assert find_realization(torus, graph) == 1


def _labeled_reports(surface, max_crossings=3):
    graphs = [build_labeled_snake(surface, arc) for arc in surface_walks(surface, max_crossings)]
    reports = []
    for first, second in itertools.combinations(graphs, 2):
        reports.extend(resolve_pair(first, second, o) for o in crossing_overlaps(first, second))
    for graph in graphs:
        reports.extend(resolve_self(graph, o) for o in self_crossing_overlaps(graph))
    return reports


def test_labeled_resolutions_satisfy_their_identities(torus, annulus):
    for surface in (torus, annulus):
        boundary = frozenset(surface.boundary)
        reports = _labeled_reports(surface)
        assert reports
        for report in reports:
            assert verify_resolution(report, boundary).ok, report.describe()


TORUS = (
    "triangle: 3 1 2\n"
    "triangle: 4 b 3\n"
    "triangle: 1 2 4\n"
    "boundary: b\n"
)

ANNULUS = (
    "triangle: 1 bo 2\n"
    "triangle: 2 1 bi\n"
    "boundary: bo bi\n"
)


def test_arcs_crossing_at_their_ends_are_grafted(annulus):
    check = skein_check(annulus, 'flip2', 'flip1')
    assert check.report.case == 'GRAFT-2'
    assert check.ok
    assert check.y_with == 1
    assert check.y_without == x('y1')
    product = curve_laurent(annulus, 'flip1') * curve_laurent(annulus, 'flip2')
    assert product == curve_laurent(annulus, 'core') + x('y1') * x('x1') * x('x2')


def test_graft_sites_of_the_annulus_flips(annulus):
    flip2 = build_labeled_snake(annulus, annulus.curve('flip2'))
    flip1 = build_labeled_snake(annulus, annulus.curve('flip1'))
    sites = pair_graft_sites(annulus, flip2, flip1)
    assert [site.segments for site in sites] == [(1, 0), (0, 1)]
    assert sites[0].position == 1
    assert sites[0].second.tile_labels == ('1',)
    for site in sites:
        assert verify_resolution(site.resolve(), frozenset(annulus.boundary)).ok
    assert pair_graft_sites(annulus, flip2, flip2) == []


def test_smoothing_grafted_arcs(annulus):
    smoothing = smooth(annulus, 'flip2', 'flip1')
    boundary = frozenset(annulus.boundary)
    assert smoothing.lhs == smoothing.rhs(boundary)
    assert len(smoothing.terms) == 2
    assert set(smoothing.names.values()) == {'core', 'x1', 'x2', '1'}
    lines = format_smoothing(smoothing, boundary)
    assert '+ core' in lines


def test_arc_grafted_onto_the_middle_of_another():
    surface = parse_surface(TORUS + "arc long: start=2 3 1\narc short: start=1 2\n")
    assert crossing_overlaps(build_labeled_snake(surface, surface.curve('long')),
                             build_labeled_snake(surface, surface.curve('short'))) == []
    assert cluster_variable(surface, surface.curve('long')) == (
        x('x1') * x('x2') * x('x4') + x('y3') * x('x2') ** 2 + x('y1') * x('y3') * x('x3') * x('x4')
    ) / (x('x1') * x('x3'))
    check = skein_check(surface, 'long', 'short')
    assert check.report.case == 'GRAFT-1'
    assert check.report.notes['position'] == 1
    assert check.report.notes['grafting_edge_minimal']
    assert check.y_with == 1
    assert check.y_without == x('y3')
    assert check.ok


def test_arc_crossing_its_own_start_closes_a_loop():
    surface = parse_surface(TORUS + "arc hook: start=3 1 2 4\nloop inner: 1 2 base=3\n")
    graph = build_labeled_snake(surface, surface.curve('hook'))
    assert self_crossing_overlaps(graph) == []
    assert [site.segments for site in self_graft_sites(surface, graph)] == [(0, 2)]
    check = skein_check(surface, 'hook')
    assert check.report.case == 'SELFGRAFT-1'
    assert check.y_with == 1
    assert check.y_without == x('y1') * x('y2') * x('y4')
    assert check.ok
    boundary = frozenset(surface.boundary)
    edge, band = check.report.with_overlap.components()
    assert edge == EdgeGraph('b')
    assert laurent_of(band, boundary) == curve_laurent(surface, 'inner')
    assert curve_laurent(surface, 'inner') == (
        x('x2') ** 2 + x('y1') * x('x3') * x('x4') + x('y1') * x('y2') * x('x1') ** 2
    ) / (x('x1') * x('x2'))
    assert check.report.without_overlap.components() == (EdgeGraph('3'),)


def test_arc_crossing_an_arc_of_the_triangulation():
    surface = parse_surface(ANNULUS + "arc flip1: start=2 1\narc one: is=1\narc two: is=2\n")
    check = skein_check(surface, 'flip1', 'one')
    assert check.report.case == 'GRAFT-3'
    assert check.ok
    product = curve_laurent(surface, 'flip1') * x('x1')
    assert product == 1 + x('y1') * x('x2') ** 2
    assert skein_check(surface, 'flip1', 'two').report is None
    assert skein_check(surface, 'one', 'two').report is None


def test_compatible_curves(annulus):
    check = skein_check(annulus, 'flip2', 'winding')
    assert check.report is None
    assert check.ok
    smoothing = smooth(annulus, 'flip2', 'flip2')
    assert smoothing.lhs == smoothing.rhs(frozenset(annulus.boundary))


def test_skein_of_crossing_arcs(torus):
    check = skein_check(torus, 'gamma1', 'gamma2', overlap=1)
    assert check.report is not None
    assert check.report.case == 'PAIR'
    assert check.ok
    with pytest.raises(ResolutionError):
        skein_check(torus, 'gamma1', 'gamma2', overlap=5)
    with pytest.raises(SurfaceError):
        skein_check(torus, 'zeta')


def test_torus_identity(torus):
    identity = torus_identity(torus)
    assert identity.engine.ok
    assert identity.formula.ok
    assert identity.flip.ok
    assert identity.ok


def test_torus_smoothing_names_its_pieces(torus):
    smoothing = smooth(torus, 'gamma1', 'gamma2', overlap=1)
    assert smoothing.lhs == smoothing.rhs(frozenset(torus.boundary))
    names = set(smoothing.names.values())
    assert 'Brac_2(zeta)' in names
    assert 'zeta' in names
    assert component_name(EdgeGraph('b'), torus) == '1'
    assert component_name(EdgeGraph('2'), torus) == 'x2'


def _matching_monomials(report, boundary):
    """x(P)y(P) for every tuple of perfect matchings of the resolved graphs, with multiplicity."""
    found = Counter({LaurentPoly.constant(1): 1})
    for strand in report.hosts:
        host = HostGraph(strand)
        minimal = host.minimal_edges()
        extended = Counter()
        for edges in sweep(host):
            monomial = weight(host, edges, boundary) * height(host, edges, minimal)
            for before, count in found.items():
                extended[before * monomial] += count
        found = extended
    return found


def test_resolutions_match_weights_of_matchings(torus, annulus):
    checked = 0
    for surface in (torus, annulus):
        boundary = frozenset(surface.boundary)
        for report in _labeled_reports(surface):
            if report.with_overlap.sign < 0 or report.without_overlap.sign < 0:
                continue
            tiles = LaurentPoly.product(x(x_var(cell.label)) for strand in report.hosts for cell in strand.cells)
            numerator = resolution_laurent(report, boundary) * tiles
            assert all(c > 0 for c in numerator.terms.values())
            weights = Counter({LaurentPoly.monomial(dict(m)): c for m, c in numerator.terms.items()})
            assert weights == _matching_monomials(report, boundary)
            checked += 1
    assert checked


def test_identities_specialize_to_matching_counts(torus, annulus):
    for surface in (torus, annulus):
        boundary = frozenset(surface.boundary)
        for report in _labeled_reports(surface):
            count = count_relement(report.result)
            assert lhs_laurent(report, boundary).evaluate() == count
            assert resolution_laurent(report, boundary).evaluate() == count


@pytest.mark.parametrize('fixture, loop', [('torus', 'zeta'), ('annulus', 'core'), ('annulus2', 'core')])
def test_band_heights_agree_between_witnesses(request, fixture, loop):
    surface = request.getfixturevalue(fixture)
    band = build_labeled_band(surface, surface.curve(loop))
    host = HostGraph(strand_of_band(band))
    cuts = band_cuts(host)
    good = 0
    for edges in sweep(host):
        lifts = [(cut, cut.lift(edges)) for cut in cuts]
        heights = {height(cut.host, lifted) for cut, lifted in lifts if lifted is not None}
        assert len(heights) <= 1
        good += bool(heights)
    assert good == count_component(band)


def test_second_annulus_flips_follow_the_exchange_relations(annulus2):
    assert annulus2.arcs == ['1', '2', '3']
    assert annulus2.boundary == ['bi', 'bo1', 'bo2']
    b = annulus2.exchange_matrix()
    assert (b['2']['1'], b['2']['3'], b['1']['3']) == (1, 1, 1)
    for i, j in itertools.product(annulus2.arcs, repeat=2):
        assert b[i][j] == -b[j][i]
    assert curve_laurent(annulus2, 'flip1') == (x('x3') + x('y1') * x('x2')) / x('x1')
    assert curve_laurent(annulus2, 'flip2') == (x('x1') * x('x3') + x('y2')) / x('x2')
    assert curve_laurent(annulus2, 'flip3') == (1 + x('y3') * x('x1') * x('x2')) / x('x3')
    for k in annulus2.arcs:
        assert curve_laurent(annulus2, f"flip{k}") == mutated_variable(annulus2, k)


def test_second_annulus_loop_and_long_arc(annulus2):
    band = build_labeled_band(annulus2, annulus2.curve('core'))
    assert band.d == 3
    core = curve_laurent(annulus2, 'core')
    assert all(c > 0 for c in core.terms.values())
    assert core.evaluate() == count_component(band)
    around = curve_laurent(annulus2, 'around')
    assert around.evaluate() == count_component(build_labeled_snake(annulus2, annulus2.curve('around')))
    assert f_polynomial(annulus2, annulus2.curve('around')).terms[()] == 1


def test_torus_identity_matches_the_golden_file(torus):
    lines = torus_identity(torus).describe(frozenset(torus.boundary))
    pinned = (GOLDEN / 'torus_identity.txt').read_text(encoding='utf-8').splitlines()
    remaining = iter(lines)
    for line in pinned:
        assert any(line == candidate for candidate in remaining), line
