"""
Matching counts of components and formal sums.
"""

from ..graphs.band import BandGraph
from ..graphs.relement import RElement
from ..graphs.snake import EdgeGraph, SnakeGraph
from .good import count_good_matchings
from .perfect import count_matchings


def count_component(component) -> int:
    """m(G): perfect matchings of a snake graph, good matchings of a band graph, 1 for an edge."""
    if isinstance(component, BandGraph):
        return count_good_matchings(component)
    if isinstance(component, (SnakeGraph, EdgeGraph)):
        return count_matchings(component)
    raise TypeError(f"Cannot count matchings of {component!r}")


def count_relement(element: RElement) -> int:
    """Signed count of a formal sum; the zero element counts 0."""
    total = 0
    for coefficient, components in element.terms():
        product = 1
        for component in components:
            product *= count_component(component)
        total += coefficient * product
    return total
