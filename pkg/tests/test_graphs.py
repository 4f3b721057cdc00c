import pytest
from hypothesis import given, settings

from snake_calculus.errors import GraphError, ParseError
from snake_calculus.graphs import (
    EdgeGraph, EdgeRef, RElement, Side, Strand, build_snake, canonical_form, cut_band, format_component,
    from_signs, glue_band, parse_component, parse_components, reflect, sign_function, subgraph,
)

from .strategies import all_words, one_tile, relements, snakes


def test_tile_count_follows_the_word():
    assert build_snake('').d == 1
    assert build_snake('RU').d == 3
    assert EdgeGraph('1').d == 0


def test_sign_word_of_single_steps():
    assert build_snake('R').signs() == (1,)
    assert build_snake('U').signs() == (-1,)
    assert build_snake('R').signs(seed=-1) == (-1,)


@given(snakes(6))
def test_sign_word_determines_the_graph(graph):
    assert from_signs(graph.signs()) == graph
    assert from_signs(graph.signs(-1), seed=-1) == graph


@given(snakes(6))
def test_sign_function_agrees_on_shared_edges(graph):
    f = sign_function(graph)
    assert len(f) == 4 * graph.d - (graph.d - 1)
    for i, sign in enumerate(graph.signs(), start=1):
        assert f[graph.interior_edge(i)] == sign


def test_interior_edge_out_of_range():
    with pytest.raises(GraphError):
        build_snake('RU').interior_edge(3)


def test_subgraph_keeps_labels():
    graph = build_snake('R', tile_labels=('1', '2'), edge_labels=(('a', 'x', 'b', 'c'), ('d', 'e', 'f', 'x')))
    first = subgraph(graph, 1, 1)
    assert first.tile_labels == ('1',)
    assert first.edge_labels == (('a', 'x', 'b', 'c'),)
    assert subgraph(graph, 2, 2).rel == -graph.rel


def test_reflect_reverses_tiles():
    graph = build_snake('RU', tile_labels=('1', '2', '3'),
                        edge_labels=(('a', 'x', 'b', 'c'), ('y', 'd', 'e', 'x'), ('f', 'g', 'y', 'h')))
    turned = reflect(graph)
    assert turned.word() == 'UR'
    assert turned.tile_labels == ('3', '2', '1')
    assert turned.edge_labels[0] == ('y', 'h', 'f', 'g')


def test_canonical_form_identifies_rotations_and_mirrors():
    assert canonical_form(build_snake('RU')) == canonical_form(build_snake('UR'))
    assert canonical_form(build_snake('RR')) == canonical_form(build_snake('UU'))
    assert canonical_form(build_snake('RR')) != canonical_form(build_snake('RU'))


def test_relement_collects_isomorphic_terms():
    total = RElement.of(build_snake('RU')) + RElement.of(build_snake('UR'))
    assert total.coefficients == {(canonical_form(build_snake('RU')),): 2}
    assert (RElement.of(build_snake('R')) - RElement.of(build_snake('U'))).is_zero()


def test_relement_union_is_bilinear():
    a = RElement.of(build_snake('R')) + RElement.of(EdgeGraph())
    b = RElement.of(build_snake(''), sign=-1)
    product = a * b
    assert len(product.terms()) == 2
    assert all(coefficient == -1 for coefficient, _ in product.terms())


def test_band_cut_along_the_seam_gives_the_base():
    graph = build_snake('RU')
    band = glue_band(graph, EdgeRef(1, Side.S))
    assert band.d == 3
    assert cut_band(band, band.seam()) == graph
    assert band.signs()[-1] == band.closing_sign()


def test_glue_edge_must_be_south_west():
    with pytest.raises(GraphError):
        glue_band(build_snake('R'), EdgeRef(1, Side.N))


def test_format_and_parse_component():
    assert format_component(build_snake('RU')) == 'snake: RU'
    assert parse_component('snake: RU') == build_snake('RU')
    assert parse_component('edge-graph: 7') == EdgeGraph('7')
    labeled = one_tile('a', 'b', 'c', 'd')
    assert parse_component(format_component(labeled)) == labeled


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as info:
        parse_components("snake: R\n# comment\nsnake: RX\n", 'graphs.txt')
    assert info.value.line_no == 3
    assert str(info.value).startswith('graphs.txt:3:')


def test_band_record_needs_glue():
    with pytest.raises(ParseError):
        parse_component('band: RU')


def test_strand_round_trip_keeps_labels():
    graph = one_tile('a', 'b', 'c', 'd', rel=-1)
    assert Strand.from_snake(graph).to_snake() == graph


MIRROR = str.maketrans('RU', 'UR')


@pytest.mark.parametrize('word', list(all_words(6)))
def test_reflection_and_canonical_orbits(word):
    graph = build_snake(word)
    assert reflect(reflect(graph)) == graph
    form = canonical_form(graph)
    assert canonical_form(reflect(graph)) == form
    assert canonical_form(build_snake(word.translate(MIRROR))) == form
    assert canonical_form(build_snake(word[::-1])) == form


@pytest.mark.parametrize('word', list(all_words(6)))
@pytest.mark.parametrize('glue', [Side.S, Side.W])
def test_cutting_a_band_at_any_interior_edge_and_gluing_back(word, glue):
    graph = build_snake(word)
    band = glue_band(graph, EdgeRef(1, glue))
    assert cut_band(band, band.seam()) == graph
    form = canonical_form(band)
    for edge in band.interior_edges():
        cut = cut_band(band, edge)
        assert cut.d == band.d
        reglued = {canonical_form(glue_band(cut, EdgeRef(1, side))) for side in (Side.S, Side.W)}
        assert form in reglued


@settings(max_examples=1000)
@given(relements, relements, relements)
def test_relement_group_laws(a, b, c):
    zero = RElement.zero()
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a + zero == a
    assert (a - a).is_zero()
    assert -(-a) == a
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
