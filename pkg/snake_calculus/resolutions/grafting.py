"""
Grafting: resolutions of crossings with an empty overlap.

``graft_pair`` glues a second graph (or a single edge) onto tile ``s`` of the
first; ``self_graft`` does the same for a graph crossing itself.
"""

import logging
from typing import Optional, Tuple, Union

from ..errors import ResolutionError
from ..graphs.base import NE, SW, Side, key_of, tile_sign
from ..graphs.snake import EdgeGraph, SnakeGraph
from ..graphs.strand import EdgePiece, Strand
from ..matchings.host import HostGraph
from .report import ResolutionReport, Term, TileRef, missing_tiles

logger = logging.getLogger(__name__)


def _grafting_sign(graph: SnakeGraph, s: int, delta3: Optional[Side]) -> int:
    """Sign of the grafting edge, a north or east edge of tile ``s``."""
    if not 1 <= s <= graph.d:
        raise ResolutionError(f"Grafting position {s} outside 1..{graph.d}")
    if s < graph.d:
        g = -graph.signs()[s - 1]
        if delta3 is not None and key_of(delta3, tile_sign(s)) != (NE, g):
            raise ResolutionError(f"Edge {delta3.value} of tile {s} is not the boundary edge of the step")
        return g
    if delta3 is None:
        raise ResolutionError("Grafting at the last tile needs the north or east edge")
    position, g = key_of(delta3, tile_sign(s))
    if position != NE:
        raise ResolutionError(f"Grafting edge must be N or E, got {delta3.value}")
    return g


def _is_minimal(host: Strand, j: int, key, kappa: int) -> bool:
    graph = HostGraph(host)
    return graph.edge_at(j, key) in graph.minimal_edges(kappa)


def _tiles(hosts, term: Term, host: Optional[int] = None) -> Tuple[TileRef, ...]:
    return tuple(tile for tile in missing_tiles(hosts, term.pieces) if host is None or tile[0] == host)


def _frame(a: Strand, b: Strand, s: int, g: int) -> int:
    """Sign c for which tile 1 of ``b.scaled(c)`` glues onto tile ``s`` of ``a`` along matching labels."""
    default = -tile_sign(s)
    target = a.cells[s - 1].side((NE, g))
    if target is None:
        return default
    matches = [c for c in (default, -default) if b.cells[0].side((SW, g * c)) == target]
    if len(matches) == 1:
        return matches[0]
    if not matches:
        logger.warning(f"No south-west edge of the grafted graph carries label {target}")
    return default


def graft_pair(first: SnakeGraph, second: Union[SnakeGraph, EdgeGraph], s: int,
               delta3: Optional[Side] = None) -> ResolutionReport:
    """``(G3 ⊔ G4) + (G5 ⊔ G6)`` for grafting ``second`` on tile ``s`` of ``first``."""
    a = Strand.from_snake(first, host=0)
    if isinstance(second, EdgeGraph):
        return _graft_edge(a, s, second.label)

    g = _grafting_sign(first, s, delta3)
    b = Strand.from_snake(second, host=1)
    c = _frame(a, b, s, g)
    hosts = (a, b)
    framed = b.scaled(c)
    d = a.d

    if s < d:
        case = 'GRAFT-1'
        g3 = a.sub(1, s).joined(g, framed)
        g4 = a.drop_pred(g, start=s + 1)
        g6 = framed.turned().scaled(-1).joined(g, a.sub(s + 1, d))
    else:
        case = 'GRAFT-2'
        g3 = a.joined(g, framed)
        g4 = EdgePiece(a.cells[-1], (NE, g))
        g6 = framed.drop_pred(g)
    g5 = a.drop_succ(g, stop=s - 1)

    with_overlap, without_overlap = Term((g3, g4)), Term((g5, g6))
    minimal = _is_minimal(a, s, (NE, g), a.kappa)
    notes = {'position': s, 'grafting_edge_minimal': minimal, 'frame': c}
    if minimal:
        y_with, y_without = (), _tiles(hosts, without_overlap)
    else:
        y_with, y_without = _tiles(hosts, with_overlap), ()
    if case == 'GRAFT-2':
        # each input graph contributes its own missing tiles when its glued edge is minimal
        partner_minimal = _is_minimal(b, 1, (SW, g * c), b.kappa)
        notes['glued_edge_minimal'] = partner_minimal
        y_without = _tiles(hosts, without_overlap, 0) if minimal else ()
        if partner_minimal:
            y_without += _tiles(hosts, without_overlap, 1)
    logger.debug(f"Grafting at tile {s}: grafting edge is {'minimal' if minimal else 'not minimal'}")
    return ResolutionReport(case, hosts, with_overlap, without_overlap, y_with, y_without, notes=notes)


def _graft_edge(a: Strand, s: int, label: Optional[str]) -> ResolutionReport:
    if not 1 <= s <= a.d:
        raise ResolutionError(f"Grafting position {s} outside 1..{a.d}")
    g3 = a.drop_succ(-1, stop=s - 1)
    g4 = a.drop_pred(1, start=s)
    g5 = a.drop_succ(1, stop=s - 1)
    g6 = a.drop_pred(-1, start=s)
    return ResolutionReport('GRAFT-3', (a, None), Term((g3, g4)), Term((g5, g6)), None, None,
                            notes={'position': s, 'edge_label': label})


def self_graft(graph: SnakeGraph, s: int, delta3: Optional[Side] = None) -> ResolutionReport:
    """``(G3 ⊔ G4°) + G56`` for a self-crossing with empty overlap at tile ``s``."""
    g = _grafting_sign(graph, s, delta3)
    a = Strand.from_snake(graph, host=0)
    hosts = (a,)
    d = a.d

    if s < d:
        g3 = a.drop_pred(g, start=s + 1)
        g4 = a.sub(1, s).closed(g)
        g56 = a.sub(1, s).turned().scaled(-1).joined(g, a.sub(s + 1, d)).drop_pred(-g)
        with_overlap, without_overlap = Term((g3, g4)), Term((g56,))
        maximal = _is_minimal(a, s, (NE, g), -a.kappa)
        if maximal:
            y_with, y_without = _tiles(hosts, with_overlap), ()
        else:
            y_with, y_without = (), _tiles(hosts, without_overlap)
        return ResolutionReport('SELFGRAFT-1', hosts, with_overlap, without_overlap, y_with, y_without,
                                notes={'position': s, 'grafting_edge_maximal': maximal})

    with_overlap = Term((EdgePiece(a.cells[-1], (NE, g)), a.closed(g)))
    i = a.last_joint(g)
    if i is None:
        return ResolutionReport('SELFGRAFT-2', hosts, with_overlap, Term.zero(), (), (),
                                notes={'position': s})
    j = a.first_joint(g)
    if j is not None and j < i:
        g56 = a.sub(j + 1, i)
    else:
        j = i
        g56 = a.interior_piece(i)
    # the glued edges: delta3' starts the graph, delta3 ends it
    start_minimal = _is_minimal(a, 1, (SW, g), a.kappa)
    end_minimal = _is_minimal(a, d, (NE, g), a.kappa)
    y_without = []
    if start_minimal:
        y_without.extend((0, k) for k in range(1, j + 1))
    if end_minimal:
        y_without.extend((0, k) for k in range(i + 1, d + 1))
    return ResolutionReport('SELFGRAFT-2', hosts, with_overlap, Term((g56,)), (), tuple(y_without),
                            notes={'position': s, 'start_edge_minimal': start_minimal,
                                   'end_edge_minimal': end_minimal})
