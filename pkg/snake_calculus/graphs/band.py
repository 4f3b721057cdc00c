"""
Band graphs: snake graphs closed up along a sign-matched pair of edges.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..errors import GraphError
from .base import NE, SW, Side, key_of, tile_sign
from .snake import EdgeRef, SnakeGraph
from .strand import Strand


@dataclass(frozen=True)
class BandGraph:
    """The band graph obtained from ``base`` by identifying ``glue`` with its partner.

    Attributes:
        base: The snake graph that was glued.
        glue: ``Side.S`` or ``Side.W``, the edge b of the first tile.
    """

    base: SnakeGraph
    glue: Side = Side.S

    def __post_init__(self):
        if self.glue not in (Side.S, Side.W):
            raise GraphError(f"Glue edge must be the S or W edge of the first tile, got {self.glue.value}")

    @property
    def d(self) -> int:
        return self.base.d

    @property
    def is_labeled(self) -> bool:
        return self.base.is_labeled

    @property
    def rel(self) -> int:
        return self.base.rel

    def closing_sign(self, seed: int = 1) -> int:
        """Sign of the glue edge b (and of its partner b')."""
        return seed if self.glue is Side.S else -seed

    def signs(self, seed: int = 1) -> Tuple[int, ...]:
        """Cyclic sign word; the last entry belongs to the glue edge."""
        return self.base.signs(seed) + (self.closing_sign(seed),)

    def partner(self) -> EdgeRef:
        """The edge b' of the last tile identified with b."""
        a = tile_sign(self.d)
        key = (NE, self.closing_sign())
        return EdgeRef(self.d, Side.N if key == key_of(Side.N, a) else Side.E)

    def seam(self) -> EdgeRef:
        return EdgeRef(1, self.glue)

    def interior_edges(self) -> List[EdgeRef]:
        """The interior edges of the base followed by the glued edge."""
        return self.base.interior_edges() + [self.seam()]

    def tile_labels(self) -> Optional[Tuple[str, ...]]:
        return self.base.tile_labels

    def word(self) -> str:
        return self.base.word()


def strand_of_band(band: BandGraph, host: Optional[int] = None) -> Strand:
    return Strand.from_snake(band.base, host).closed(band.closing_sign())


def band_of_strand(strand: Strand) -> BandGraph:
    """Materialize a closed strand; the glue edge is the first cell's SW edge of the closing sign."""
    if not strand.is_closed:
        raise GraphError("Only closed strands form band graphs")
    base = Strand(strand.cells, strand.joints, strand.kappa).to_snake()
    glue = Side.S if strand.closing == tile_sign(1) else Side.W
    band = BandGraph(base, glue)
    if base.is_labeled:
        first = strand.cells[0].side((SW, strand.closing))
        last = strand.cells[-1].side((NE, strand.closing))
        if first != last:
            raise GraphError(f"Glue edges carry different labels {first} and {last}")
    return band


def glue_band(graph: SnakeGraph, b: EdgeRef) -> BandGraph:
    """Identify the edge b of the first tile with the NE edge of equal sign."""
    if b.tile != 1 or b.side not in (Side.S, Side.W):
        raise GraphError(f"Glue edge must be the S or W edge of tile 1, got {b}")
    return band_of_strand(Strand.from_snake(graph).closed(key_of(b.side, tile_sign(1))[1]))


def cut_band(band: BandGraph, e: EdgeRef) -> SnakeGraph:
    """Cut the band graph open along the interior edge e."""
    if e in (band.seam(), band.partner()):
        return band.base
    k = band.base.interior_index(e) if 1 <= e.tile <= band.d else None
    if k is None:
        raise GraphError(f"{e} is not an interior edge of the band graph")
    return strand_of_band(band).cut(k).to_snake()
