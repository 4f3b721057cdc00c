"""
Overlap detection, crossing tests, resolutions and graftings.
"""

from .overlaps import (
    Overlap, OverlapDirection, find_pair_overlaps, find_self_overlaps,
    is_crossing_pair, is_self_crossing, partner_frame,
)
from .report import ResolutionReport, Term, TileRef, materialize, missing_tiles
from .pair import resolve_pair
from .self_crossing import resolve_self
from .grafting import graft_pair, self_graft

__all__ = [
    'Overlap', 'OverlapDirection', 'find_pair_overlaps', 'find_self_overlaps',
    'is_crossing_pair', 'is_self_crossing', 'partner_frame',
    'ResolutionReport', 'Term', 'TileRef', 'materialize', 'missing_tiles',
    'resolve_pair', 'resolve_self', 'graft_pair', 'self_graft',
]
