import pytest
import sympy
from hypothesis import given, settings

from snake_calculus.errors import GraphError
from snake_calculus.graphs import EdgeGraph, RElement, build_snake
from snake_calculus.laurent import LaurentPoly, edge_weight, laurent_of, snake_laurent, verify_identity

from .strategies import laurent_polys, monomials, one_tile

x = LaurentPoly.variable


def _poly(text: str) -> LaurentPoly:
    """Small builder: ``'xa*xb + y1*xc'`` style sums of products, coefficients 1."""
    total = LaurentPoly()
    for term in text.split('+'):
        total = total + LaurentPoly.product(x(name.strip()) for name in term.split('*'))
    return total


@settings(max_examples=50)
@given(laurent_polys, laurent_polys)
def test_arithmetic_agrees_with_sympy(a, b):
    assert sympy.expand((a + b).as_expr() - (a.as_expr() + b.as_expr())) == 0
    assert sympy.expand((a * b).as_expr() - a.as_expr() * b.as_expr()) == 0
    assert sympy.expand((a - b).as_expr() - (a.as_expr() - b.as_expr())) == 0


@given(monomials)
def test_monomials_are_invertible(exponents):
    m = LaurentPoly.monomial(exponents, -1)
    assert m * m.inverse() == 1
    assert (m ** -2) * (m ** 2) == 1


def test_sums_are_not_invertible():
    with pytest.raises(ZeroDivisionError):
        (x('x1') + 1).inverse()
    with pytest.raises(ZeroDivisionError):
        LaurentPoly.constant(2).inverse()


def test_zero_terms_are_dropped():
    assert (x('x1') - x('x1')).is_zero()
    assert str(LaurentPoly()) == '0'


def test_formatting():
    p = x('x2', 2) * x('x1', -1) - 3 * x('y1')
    assert str(p) == 'x1^-1*x2^2 - 3*y1'
    assert p.format_terms() == ['1 x1^-1 x2^2', '-3 y1']


def test_substitute_and_specialize():
    p = (x('x2') ** 2 + x('y1') * x('x3')) / x('x1')
    assert p.substitute({'x2': x('x3')}) == (x('x3') ** 2 + x('y1') * x('x3')) / x('x1')
    assert p.specialize('x') == 1 + x('y1')
    assert p.specialize('y').specialize('x').evaluate() == 2


def test_one_tile_expansion():
    graph = one_tile('a', 'b', 'c', 'd')
    expected = (x('xa') * x('xc') + x('y1') * x('xb') * x('xd')) / x('x1')
    assert snake_laurent(graph) == expected


def test_one_tile_expansion_with_opposite_orientation():
    graph = one_tile('a', 'b', 'c', 'd', rel=-1)
    expected = (x('xb') * x('xd') + x('y1') * x('xa') * x('xc')) / x('x1')
    assert snake_laurent(graph) == expected


def test_two_tile_expansion():
    graph = build_snake('R', tile_labels=('1', '2'),
                        edge_labels=(('a', 'e', 'b', 'c'), ('d', 'f', 'g', 'e')))
    numerator = _poly('xa*xb*xf + y1*xc*xe*xf + y1*y2*xc*xd*xg')
    assert snake_laurent(graph) == numerator / (x('x1') * x('x2'))


def test_boundary_edges_weigh_one():
    graph = one_tile('a', 'b', 'c', 'd')
    assert snake_laurent(graph, boundary={'a', 'b'}) == (x('xc') + x('y1') * x('xd')) / x('x1')
    assert edge_weight('b', frozenset({'b'})) == 1


def test_unlabeled_graphs_have_no_expansion():
    with pytest.raises(GraphError):
        snake_laurent(build_snake('R'))
    with pytest.raises(GraphError):
        edge_weight(None)


def test_expansion_of_formal_sums():
    tile = one_tile('a', 'b', 'c', 'd')
    element = RElement.of(tile, EdgeGraph('e')) - RElement.of(EdgeGraph('a'))
    assert laurent_of(element) == snake_laurent(tile) * x('xe') - x('xa')


def test_verify_identity_reports_the_difference():
    check = verify_identity(x('x1') + 1, x('x1'))
    assert not check.ok
    assert check.diff == 1
    assert check.describe()[-1] == '  1'
    assert verify_identity(x('x1'), x('x1')).ok


@settings(max_examples=1000)
@given(laurent_polys, laurent_polys, laurent_polys)
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    assert a * 1 == a
    assert (a - a).is_zero()


@given(monomials, monomials)
def test_evaluation_is_multiplicative(m1, m2):
    a = LaurentPoly.monomial(m1, 2) + 1
    b = LaurentPoly.monomial(m2, -1) + 3
    assert (a * b).evaluate() == a.evaluate() * b.evaluate()
