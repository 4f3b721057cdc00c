"""
Overlaps, self-overlaps and the crossing tests.

Two windows are isomorphic when their joint signs agree up to a global factor
``epsilon`` (the sign function of the second graph is taken as ``epsilon``
times its canonical one). An overlap is kept only when it is maximal: it cannot
be extended by a tile on either side in both graphs at once.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Sequence, Tuple

from ..errors import ResolutionError
from ..graphs.snake import SnakeGraph
from ..graphs.strand import Cell, Strand

logger = logging.getLogger(__name__)


class OverlapDirection(Enum):
    SAME = 'same'
    OPPOSITE = 'opposite'


@dataclass(frozen=True)
class Overlap:
    """Windows ``[s, t]`` and ``[s_prime, t_prime]`` carrying isomorphic subgraphs.

    For an OPPOSITE overlap the first tile of the window ``[s, t]`` corresponds
    to tile ``t_prime`` of the second window. ``epsilon`` relates the sign
    functions induced on the two windows.
    """

    s: int
    t: int
    s_prime: int
    t_prime: int
    direction: OverlapDirection = OverlapDirection.SAME
    epsilon: int = 1
    self_overlap: bool = False

    @property
    def length(self) -> int:
        return self.t - self.s + 1

    @property
    def intersecting(self) -> bool:
        return self.self_overlap and self.s_prime <= self.t + 1

    def sort_key(self) -> Tuple:
        return (self.s, self.t, self.s_prime, self.t_prime, self.direction.value, -self.epsilon)

    def __str__(self) -> str:
        kind = 'self-overlap' if self.self_overlap else 'overlap'
        return (f"{kind} [{self.s},{self.t}] ~ [{self.s_prime},{self.t_prime}] "
                f"{self.direction.value} eps={'+' if self.epsilon > 0 else '-'}")


def _cells_agree(a: Cell, b: Cell, epsilon: int) -> bool:
    b = b.scaled(epsilon)
    return a.label == b.label and a.sides == b.sides


def _bends(strand: Strand, k: int) -> bool:
    return strand.joints[k - 2] == strand.joints[k - 1]


def _single_tile_allowed(a: Strand, b: Strand, k: int, k_prime: int) -> bool:
    """An interior single tile overlaps only where both graphs run straight or both zigzag."""
    if k in (1, a.d) or k_prime in (1, b.d):
        return True
    return _bends(a, k) == _bends(b, k_prime)


def _windows(a: Strand, b: Strand, epsilon: int, labeled: bool) -> Iterator[Tuple[int, int, int, int]]:
    """Maximal pairs of windows ``[s, t]`` of ``a`` and ``[u, v]`` of ``b``."""

    def agree(i: int, k: int) -> bool:
        return not labeled or _cells_agree(a.cells[i - 1], b.cells[k - 1], epsilon)

    for length in range(1, min(a.d, b.d) + 1):
        for s in range(1, a.d - length + 2):
            t = s + length - 1
            for u in range(1, b.d - length + 2):
                v = u + length - 1
                if not all(agree(s + k, u + k) for k in range(length)):
                    continue
                if any(a.joints[s - 1 + k] != epsilon * b.joints[u - 1 + k] for k in range(length - 1)):
                    continue
                if s > 1 and u > 1 and a.joints[s - 2] == epsilon * b.joints[u - 2] and agree(s - 1, u - 1):
                    continue
                if t < a.d and v < b.d and a.joints[t - 1] == epsilon * b.joints[v - 1] and agree(t + 1, v + 1):
                    continue
                if length == 1 and not _single_tile_allowed(a, b, s, u):
                    continue
                yield s, t, u, v


def find_pair_overlaps(first: SnakeGraph, second: SnakeGraph) -> List[Overlap]:
    """All maximal overlaps of two snake graphs, in both directions."""
    if first.d == 1 and second.d == 1:
        return [Overlap(1, 1, 1, 1)] if not _label_mismatch(first, second) else []
    a = Strand.from_snake(first)
    b = Strand.from_snake(second)
    labeled = first.is_labeled and second.is_labeled
    found = set()
    for direction, other in ((OverlapDirection.SAME, b), (OverlapDirection.OPPOSITE, b.turned())):
        for epsilon in (1, -1):
            for s, t, u, v in _windows(a, other, epsilon, labeled):
                if direction is OverlapDirection.OPPOSITE:
                    u, v = b.d + 1 - v, b.d + 1 - u
                found.add(Overlap(s, t, u, v, direction, epsilon))
    overlaps = sorted(found, key=Overlap.sort_key)
    logger.debug(f"Found {len(overlaps)} overlaps of {first.word() or '-'} and {second.word() or '-'}")
    return overlaps


def _label_mismatch(first: SnakeGraph, second: SnakeGraph) -> bool:
    if not (first.is_labeled and second.is_labeled):
        return False
    a = Strand.from_snake(first).cells[0]
    b = Strand.from_snake(second).cells[0]
    return not (_cells_agree(a, b, 1) or _cells_agree(a, b, -1))


def _coherent_epsilon(direction: OverlapDirection) -> int:
    return 1 if direction is OverlapDirection.SAME else -1


def find_self_overlaps(graph: SnakeGraph) -> List[Overlap]:
    """All maximal self-overlaps with ``s < s_prime``.

    A window pair admitting both epsilons is reported once per direction, with
    the epsilon under which a self-crossing is possible.
    """
    a = Strand.from_snake(graph)
    d = a.d
    labeled = graph.is_labeled
    best = {}
    for direction, other in ((OverlapDirection.SAME, a), (OverlapDirection.OPPOSITE, a.turned())):
        for epsilon in (1, -1):
            for s, t, u, v in _windows(a, other, epsilon, labeled):
                if direction is OverlapDirection.OPPOSITE:
                    u, v = d + 1 - v, d + 1 - u
                if s >= u:
                    continue
                key = (s, t, u, v, direction)
                if key in best and best[key].epsilon == _coherent_epsilon(direction):
                    continue
                if t == s and u - s <= 2 and 1 < s and u < d:
                    logger.debug(f"Single-tile self-overlap at tiles {s} and {u} shares flanking tiles")
                best[key] = Overlap(s, t, u, v, direction, epsilon, self_overlap=True)
    return sorted(best.values(), key=Overlap.sort_key)


def partner_frame(second: Strand, overlap: Overlap) -> Tuple[Strand, int, int]:
    """The second graph turned and scaled so that the overlap runs in the same direction.

    Returns the transformed strand and the overlap window in its indices.
    """
    if overlap.direction is OverlapDirection.OPPOSITE:
        d = second.d
        return second.turned().scaled(overlap.epsilon), d + 1 - overlap.t_prime, d + 1 - overlap.s_prime
    return second.scaled(overlap.epsilon), overlap.s_prime, overlap.t_prime


def _pair_crosses(sigma: Sequence[int], tau: Sequence[int], s: int, t: int, u: int, v: int,
                  d: int, d_prime: int) -> bool:
    def f(k: int) -> int:
        return sigma[k - 1]

    def g(k: int) -> int:
        return tau[k - 1]

    if s > 1 and t < d and f(s - 1) == -f(t):
        return True
    if u > 1 and v < d_prime and g(u - 1) == -g(v):
        return True
    if s == 1 and t < d and u > 1 and v == d_prime and f(t) == g(u - 1):
        return True
    return s > 1 and t == d and u == 1 and v < d_prime and f(s - 1) == g(v)


def is_crossing_pair(first: SnakeGraph, second: SnakeGraph, overlap: Overlap) -> bool:
    """Whether the two graphs cross in ``overlap``; evaluated under both sign seeds."""
    if overlap.self_overlap:
        raise ResolutionError("A self-overlap does not describe a pair of graphs")
    results = set()
    for seed in (1, -1):
        sigma = first.signs(seed)
        base = Strand(tuple(Cell() for _ in range(second.d)), second.signs(seed))
        partner, u, v = partner_frame(base, overlap)
        results.add(_pair_crosses(sigma, partner.joints, overlap.s, overlap.t, u, v, first.d, second.d))
    if len(results) != 1:
        raise ResolutionError(f"Crossing test for {overlap} depends on the sign function")
    return results.pop()


def _self_crosses(sigma: Sequence[int], overlap: Overlap, d: int) -> bool:
    def f(k: int) -> int:
        return sigma[k - 1]

    s, t, s_prime, t_prime = overlap.s, overlap.t, overlap.s_prime, overlap.t_prime
    # an opposite overlap with touching windows folds back onto itself: a kink, not a crossing
    if overlap.direction is OverlapDirection.OPPOSITE and overlap.intersecting:
        return False
    first = (
        (s > 1 and f(s - 1) == -f(t))
        or (t_prime < d and f(s_prime - 1) == -f(t_prime))
        or (s == 1 and t_prime == d)
    )
    return first and f(t) == f(s_prime - 1)


def is_self_crossing(graph: SnakeGraph, overlap: Overlap) -> bool:
    """Whether ``graph`` self-crosses in ``overlap``; evaluated under both sign seeds."""
    if not overlap.self_overlap:
        raise ResolutionError("A pair overlap does not describe a self-overlap")
    if overlap.epsilon != _coherent_epsilon(overlap.direction):
        return False
    results = {_self_crosses(graph.signs(seed), overlap, graph.d) for seed in (1, -1)}
    if len(results) != 1:
        raise ResolutionError(f"Self-crossing test for {overlap} depends on the sign function")
    return results.pop()
