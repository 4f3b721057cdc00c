"""
Good perfect matchings of band graphs.

A perfect matching P of a band graph is good when, for some interior edge e,
P together with a copy of e is a perfect matching of the snake graph obtained
by cutting along e. Every such e is recorded as a witness.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, List, Optional, Set

from ..graphs.band import BandGraph, strand_of_band
from ..graphs.base import NE, SW
from ..graphs.snake import EdgeRef
from ..graphs.strand import Strand
from .host import HostGraph
from .perfect import Matching, sweep

logger = logging.getLogger(__name__)


@dataclass
class Cut:
    """The snake graph obtained by cutting a band strand at joint ``k``."""

    band: HostGraph
    k: int

    def __post_init__(self):
        self.strand: Strand = self.band.strand.cut(self.k)
        self.host = HostGraph(self.strand)
        sign = self.band.strand.cyclic_joints()[self.k - 1]
        self.edge = self.band.joint_ref(self.k)
        self.copies = (self.host.edge_at(1, (SW, sign)), self.host.edge_at(self.strand.d, (NE, sign)))

    def to_cut_index(self, j: int) -> int:
        return (j - self.k - 1) % self.band.d + 1

    def to_band_index(self, j: int) -> int:
        return (j + self.k - 1) % self.band.d + 1

    def image(self, ref: EdgeRef) -> EdgeRef:
        j, key = self.band.incidences[ref][0]
        return self.host.edge_at(self.to_cut_index(j), key)

    def preimage(self, ref: EdgeRef) -> EdgeRef:
        j, key = self.host.incidences[ref][0]
        return self.band.edge_at(self.to_band_index(j), key)

    def lift(self, edges: FrozenSet[EdgeRef]) -> Optional[FrozenSet[EdgeRef]]:
        """The perfect matching ``P ⊔ {e}`` of the cut graph, if there is one."""
        image = frozenset(self.image(ref) for ref in edges if ref != self.edge)
        if self.edge in edges:
            candidates = [image | set(self.copies)]
        else:
            candidates = [image | {copy} for copy in self.copies]
        for candidate in candidates:
            if self.host.is_perfect(candidate):
                return candidate
        return None

    def project(self, edges: FrozenSet[EdgeRef]) -> Optional[FrozenSet[EdgeRef]]:
        """Band matching obtained from a cut matching containing a copy of e."""
        present = [copy for copy in self.copies if copy in edges]
        if not present:
            return None
        projected = {self.preimage(ref) for ref in edges if ref not in self.copies}
        if len(present) == 2:
            projected.add(self.edge)
        return frozenset(projected)


def band_cuts(host: HostGraph) -> List[Cut]:
    return [Cut(host, k) for k in range(1, host.d + 1)]


def good_matchings_of(strand: Strand) -> List[Matching]:
    host = HostGraph(strand)
    cuts = band_cuts(host)
    result = []
    for edges in sweep(host):
        witnesses = tuple(cut.edge for cut in cuts if cut.lift(edges) is not None)
        if witnesses:
            result.append(Matching(edges, witnesses))
        else:
            logger.debug(f"Perfect matching {sorted(edges)} of band graph is not good")
    return sorted(result, key=Matching.sort_key)


def enumerate_good_matchings(band: BandGraph) -> List[Matching]:
    """Good perfect matchings of ``band`` with their witnesses, lexicographically ordered."""
    return good_matchings_of(strand_of_band(band))


def good_matchings_by_cuts(band: BandGraph) -> Set[FrozenSet[EdgeRef]]:
    """Union over all cuts of the matchings that lift; an independent oracle."""
    host = HostGraph(strand_of_band(band))
    found: Set[FrozenSet[EdgeRef]] = set()
    for cut in band_cuts(host):
        for edges in sweep(cut.host):
            projected = cut.project(edges)
            if projected is not None:
                found.add(projected)
    return found


@lru_cache(maxsize=None)
def count_good_matchings(band: BandGraph) -> int:
    return len(enumerate_good_matchings(BandGraph(band.base.unlabeled(), band.glue)))
