"""
Resolution of a snake graph that crosses itself in a self-overlap.

Pieces are written in the sign frame of the input: ``f(k)`` is the sign of the
interior edge between tiles k and k+1.
"""

import logging
from typing import Callable

from ..errors import ResolutionError
from ..graphs.snake import SnakeGraph
from ..graphs.strand import Strand
from .overlaps import Overlap, OverlapDirection, find_self_overlaps, is_self_crossing
from .report import ResolutionReport, Term

logger = logging.getLogger(__name__)


def resolve_self(graph: SnakeGraph, overlap: Overlap) -> ResolutionReport:
    """``(G3 ⊔ G4°) + G56`` for the same direction, ``G34 + (G5 ⊔ G6°)`` for the opposite one."""
    if overlap not in find_self_overlaps(graph):
        raise ResolutionError(f"{overlap} is not a self-overlap of the graph")
    if not is_self_crossing(graph, overlap):
        raise ResolutionError(f"The graph does not self-cross in {overlap}")
    strand = Strand.from_snake(graph, host=0)
    if overlap.direction is OverlapDirection.SAME:
        report = _same_direction(strand, overlap)
    else:
        report = _opposite_direction(strand, overlap)
    report.notes['overlap'] = str(overlap)
    logger.debug(f"Resolved self-crossing as {report.case}")
    return report


def _signs(strand: Strand) -> Callable[[int], int]:
    def f(k: int) -> int:
        return strand.joints[k - 1]
    return f


def _same_direction(a: Strand, overlap: Overlap) -> ResolutionReport:
    f = _signs(a)
    d = a.d
    s, t, s_prime, t_prime = overlap.s, overlap.t, overlap.s_prime, overlap.t_prime

    g3 = a.sub(1, t) if t_prime == d else a.sub(1, t).joined(f(t_prime), a.sub(t_prime + 1, d))
    g4 = a.sub(s, s_prime - 1).closed(f(s_prime - 1))
    with_overlap = Term((g3, g4))

    if s_prime <= t:
        g56 = a.sub(s_prime, t)
        if s > 1:
            g56 = a.sub(1, s - 1).joined(f(s - 1), g56)
        if t_prime < d:
            g56 = g56.joined(f(t_prime), a.sub(t_prime + 1, d))
        band_tiles = tuple((0, k) for k in range(s, s_prime))
        return ResolutionReport("SELF-SAME-s'<=t", (a,), with_overlap, Term((g56,), -1), y_without=band_tiles)

    if s_prime > t + 1:
        case, without = _same_apart(a, overlap)
    else:
        case, without = _same_adjacent(a, overlap)
    return ResolutionReport(case, (a,), with_overlap, without)


def _same_apart(a: Strand, overlap: Overlap):
    """G56 when the two windows are separated by at least one tile."""
    f = _signs(a)
    d = a.d
    s, t, s_prime, t_prime = overlap.s, overlap.t, overlap.s_prime, overlap.t_prime
    middle = a.sub(t + 1, s_prime - 1).turned().scaled(-1)

    if s > 1 and t_prime < d:
        piece = a.sub(1, s - 1).joined(-f(s - 1), middle).joined(f(t), a.sub(t_prime + 1, d))
        return "SELF-SAME-s'>t+1(a)", Term((piece,))
    if s == 1 and t_prime < d:
        piece = middle.joined(f(t), a.sub(t_prime + 1, d)).drop_pred(-f(s_prime - 1))
        return "SELF-SAME-s'>t+1(b)", Term((piece,))
    if s > 1:
        piece = a.sub(1, s - 1).joined(-f(s - 1), middle).drop_succ(-f(t))
        return "SELF-SAME-s'>t+1(c)", Term((piece,))

    n = middle.d
    first = middle.first_joint(-f(s_prime - 1))
    i = n if first is None else first
    last = middle.last_joint(-f(t))
    j = 0 if last is None else last
    if i < j:
        return "SELF-SAME-s'>t+1(d)", Term((middle.sub(i + 1, j),))
    if i == j:
        return "SELF-SAME-s'>t+1(d)", Term((middle.interior_piece(i),))
    return "SELF-SAME-s'>t+1(d)", Term.zero()


def _same_adjacent(a: Strand, overlap: Overlap):
    """G56 when the second window starts right after the first one ends."""
    f = _signs(a)
    d = a.d
    s, t_prime = overlap.s, overlap.t_prime

    if s == 1 and t_prime < d:
        return "SELF-SAME-s'=t+1(a)", Term((a.drop_pred(-f(t_prime), start=t_prime + 1),), -1)
    if s == 1:
        return "SELF-SAME-s'=t+1(b)", Term((a.interior_piece(overlap.t),), -1)
    if t_prime == d:
        return "SELF-SAME-s'=t+1(d)", Term((a.drop_succ(-f(s - 1), stop=s - 2),), -1)

    # the reflected window ending at tile s-1 runs against the one starting at t'+1
    k = s - 2
    while k >= 1 and t_prime + s - k <= d and f(k) == -f(t_prime + s - k - 1):
        k -= 1
    q = t_prime + s - k - 1
    negative = (q < d and f(t_prime) == -f(q)) or (k > 0 and f(s - 1) == -f(k))
    sign = -1 if negative else 1
    if k > 0 and q < d:
        piece = a.sub(1, k).joined(-f(k), a.sub(q + 1, d))
    elif q < d:
        piece = a.drop_pred(f(q), start=q + 1)
    elif k > 0:
        piece = a.drop_succ(f(k), stop=k - 1)
    else:
        return "SELF-SAME-s'=t+1(c)", Term.zero()
    return "SELF-SAME-s'=t+1(c)", Term((piece,), sign)


def _opposite_direction(a: Strand, overlap: Overlap) -> ResolutionReport:
    f = _signs(a)
    d = a.d
    s, t, s_prime, t_prime = overlap.s, overlap.t, overlap.s_prime, overlap.t_prime
    if s_prime <= t + 1:
        raise ResolutionError(f"Opposite-direction self-overlap {overlap} has intersecting windows")

    middle = a.sub(t + 1, s_prime - 1).turned().scaled(-1)
    g34 = a.sub(1, t).joined(-f(t), middle).joined(-f(t), a.sub(s_prime, d))
    g6 = a.sub(t + 1, s_prime - 1).closed(-f(t))

    if s > 1 and t_prime < d:
        g5 = a.sub(1, s - 1).joined(-f(s - 1), a.sub(t_prime + 1, d))
    elif t_prime < d:
        g5 = a.sub(t_prime + 1, d).drop_pred(f(t_prime))
    elif s > 1:
        g5 = a.sub(1, s - 1).drop_succ(f(s - 1))
    else:
        return ResolutionReport('SELF-OPPOSITE', (a,), Term((g34,)), Term.zero())
    return ResolutionReport('SELF-OPPOSITE', (a,), Term((g34,)), Term((g5, g6)))
