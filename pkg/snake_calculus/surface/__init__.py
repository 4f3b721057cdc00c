"""
Triangulated surfaces, the graphs of their curves and skein relations.
"""

from .triangulation import (
    ArcSpec, LoopSpec, Triangulation, fixture_path, is_boundary_id, load_surface, parse_surface,
)
from .curves import (
    LocalOverlap, build_labeled_band, build_labeled_snake, build_strand, cluster_variable,
    crossing_monomial, curve_laurent, exchange_relation, f_polynomial, find_realization,
    local_overlaps, loop_laurent, loop_strand, mutated_variable, realizes,
)
from .grafts import GraftSite, edge_graft_sites, pair_graft_sites, realized, reversed_graph, self_graft_sites
from .skein import (
    SkeinCheck, Smoothing, SmoothTerm, TorusIdentity, bracelet_name, component_name, crossing_overlaps,
    format_smoothing, graft_at_end, resolve_curves, self_crossing_overlaps, skein_check, smooth, torus_identity,
)

__all__ = [
    'ArcSpec', 'LoopSpec', 'Triangulation', 'fixture_path', 'is_boundary_id', 'load_surface', 'parse_surface',
    'LocalOverlap', 'build_labeled_band', 'build_labeled_snake', 'build_strand', 'cluster_variable',
    'crossing_monomial', 'curve_laurent', 'exchange_relation', 'f_polynomial', 'find_realization',
    'local_overlaps', 'loop_laurent', 'loop_strand', 'mutated_variable', 'realizes',
    'GraftSite', 'edge_graft_sites', 'pair_graft_sites', 'realized', 'reversed_graph', 'self_graft_sites',
    'SkeinCheck', 'Smoothing', 'SmoothTerm', 'TorusIdentity', 'bracelet_name', 'component_name', 'crossing_overlaps',
    'format_smoothing', 'graft_at_end', 'resolve_curves', 'self_crossing_overlaps', 'skein_check', 'smooth',
    'torus_identity',
]
