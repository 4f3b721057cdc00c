"""
Snake graphs, band graphs, their sign functions and the group of formal sums.
"""

from .base import Direction, Side, SW, NE, tile_sign
from .snake import (
    EdgeRef, EdgeGraph, SnakeGraph, SignAssignment, Component,
    build_snake, from_signs, subgraph, reflect, sign_function, remove_pred, remove_succ,
)
from .strand import Cell, EdgePiece, Origin, Strand
from .band import BandGraph, glue_band, cut_band, band_of_strand, strand_of_band
from .relement import RElement, canonical_form
from .text_format import format_component, parse_component, parse_components

__all__ = [
    'Direction', 'Side', 'SW', 'NE', 'tile_sign',
    'EdgeRef', 'EdgeGraph', 'SnakeGraph', 'SignAssignment', 'Component',
    'build_snake', 'from_signs', 'subgraph', 'reflect', 'sign_function', 'remove_pred', 'remove_succ',
    'Cell', 'EdgePiece', 'Origin', 'Strand',
    'BandGraph', 'glue_band', 'cut_band', 'band_of_strand', 'strand_of_band',
    'RElement', 'canonical_form',
    'format_component', 'parse_component', 'parse_components',
]
