"""
Perfect matchings of snake graphs and good matchings of band graphs.
"""

from .host import HostGraph
from .perfect import (
    Matching, SINGLE_EDGE, enumerate_matchings, enumerate_matchings_exhaustive, count_matchings,
    minimal_matching, maximal_matching, enclosed_tiles, enclosed_in_host, difference_cycles,
)
from .good import Cut, enumerate_good_matchings, good_matchings_by_cuts, count_good_matchings, good_matchings_of
from .counting import count_component, count_relement

__all__ = [
    'HostGraph', 'Matching', 'SINGLE_EDGE',
    'enumerate_matchings', 'enumerate_matchings_exhaustive', 'count_matchings',
    'minimal_matching', 'maximal_matching', 'enclosed_tiles', 'enclosed_in_host', 'difference_cycles',
    'Cut', 'enumerate_good_matchings', 'good_matchings_by_cuts', 'count_good_matchings', 'good_matchings_of',
    'count_component', 'count_relement',
]
