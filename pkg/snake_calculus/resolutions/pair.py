"""
Resolution of two snake graphs crossing in an overlap.
"""

import logging

from ..errors import ResolutionError
from ..graphs.snake import SnakeGraph
from ..graphs.strand import Strand
from .overlaps import Overlap, find_pair_overlaps, is_crossing_pair, partner_frame
from .report import ResolutionReport, Term

logger = logging.getLogger(__name__)


def resolve_pair(first: SnakeGraph, second: SnakeGraph, overlap: Overlap) -> ResolutionReport:
    """``(G3 ⊔ G4) + (G5 ⊔ G6)`` for a crossing overlap, ``G1 ⊔ G2`` otherwise."""
    if overlap not in find_pair_overlaps(first, second):
        raise ResolutionError(f"{overlap} is not an overlap of the two graphs")
    a = Strand.from_snake(first, host=0)
    b = Strand.from_snake(second, host=1)
    hosts = (a, b)
    if not is_crossing_pair(first, second, overlap):
        logger.info(f"Graphs do not cross in {overlap}; resolution is their union")
        return ResolutionReport('PAIR-NO-CROSSING', hosts, Term((a, b)), Term.zero())

    partner, u, v = partner_frame(b, overlap)
    s, t = overlap.s, overlap.t
    d, d_prime = a.d, partner.d
    sigma, tau = a.joints, partner.joints

    def f(k: int) -> int:
        return sigma[k - 1]

    def g(k: int) -> int:
        return tau[k - 1]

    g3 = a.sub(1, t) if v == d_prime else a.sub(1, t).joined(g(v), partner.sub(v + 1, d_prime))
    g4 = partner.sub(1, v) if t == d else partner.sub(1, v).joined(f(t), a.sub(t + 1, d))

    if s > 1 and u > 1:
        g5 = a.sub(1, s - 1).joined(-f(s - 1), partner.sub(1, u - 1).turned().scaled(-1))
    elif s > 1:
        g5 = a.sub(1, s - 1).drop_succ(f(s - 1))
    elif u > 1:
        g5 = partner.sub(1, u - 1).turned().scaled(-1).drop_pred(-g(u - 1))
    else:
        raise ResolutionError(f"Crossing overlap {overlap} starts both graphs")

    if t < d and v < d_prime:
        g6 = partner.sub(v + 1, d_prime).turned().scaled(-1).joined(-f(t), a.sub(t + 1, d))
    elif t == d and v < d_prime:
        g6 = partner.sub(v + 1, d_prime).turned().scaled(-1).drop_succ(-g(v))
    elif v == d_prime and t < d:
        g6 = a.sub(t + 1, d).drop_pred(f(t))
    else:
        raise ResolutionError(f"Crossing overlap {overlap} ends both graphs")

    notes = {'overlap': str(overlap), 'windows': {0: (s, t), 1: (overlap.s_prime, overlap.t_prime)}}
    return ResolutionReport('PAIR', hosts, Term((g3, g4)), Term((g5, g6)), notes=notes)
