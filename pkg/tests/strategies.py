"""
Hypothesis strategies and small graph builders used across the tests.
"""

import itertools

from hypothesis import strategies as st

from snake_calculus.graphs import EdgeGraph, RElement, SnakeGraph, build_snake
from snake_calculus.laurent import LaurentPoly

VARIABLES = ('x1', 'x2', 'x3', 'y1', 'y2')


def one_tile(n: str, e: str, s: str, w: str, label: str = '1', rel: int = 1) -> SnakeGraph:
    return SnakeGraph((), tile_labels=(label,), edge_labels=((n, e, s, w),), rel=rel)


def all_words(max_tiles: int):
    for d in range(1, max_tiles + 1):
        for word in itertools.product('RU', repeat=d - 1):
            yield ''.join(word)


def words(max_tiles: int = 5):
    return st.text(alphabet='RU', max_size=max_tiles - 1)


def snakes(max_tiles: int = 5):
    return words(max_tiles).map(build_snake)


monomials = st.dictionaries(st.sampled_from(VARIABLES), st.integers(-2, 2), max_size=3)

laurent_polys = st.lists(
    st.tuples(monomials, st.integers(-3, 3)), max_size=4,
).map(lambda terms: sum((LaurentPoly.monomial(m, c) for m, c in terms), LaurentPoly()))

components = st.one_of(snakes(4), st.just(EdgeGraph()))

relements = st.lists(
    st.tuples(st.lists(components, min_size=1, max_size=2), st.sampled_from((1, -1))), max_size=3,
).map(lambda terms: RElement.sum(RElement.of(*parts, sign=sign) for parts, sign in terms))
