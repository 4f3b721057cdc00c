"""
Resolution reports: the two summands of a resolution, kept as pieces of the
input graphs so that the Laurent layer can trace every tile and edge back to
where it came from.
"""

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..graphs.band import band_of_strand
from ..graphs.relement import RElement
from ..graphs.strand import EdgePiece, Piece, Strand
from ..graphs.text_format import format_component

TileRef = Tuple[int, int]


def materialize(piece: Piece):
    """Snake, band or single-edge graph described by a piece."""
    if isinstance(piece, EdgePiece):
        return piece.to_graph()
    if piece.is_closed:
        return band_of_strand(piece)
    return piece.to_snake()


def piece_tiles(piece: Piece) -> List[TileRef]:
    if isinstance(piece, EdgePiece):
        return []
    return [(cell.origin.host, cell.origin.index) for cell in piece.cells]


def missing_tiles(hosts: Tuple[Optional[Strand], ...], pieces: Tuple[Piece, ...]) -> List[TileRef]:
    """Tiles of the hosts not used by ``pieces``, counted with multiplicity."""
    missing = Counter(tile for host in hosts if host is not None for tile in piece_tiles(host))
    missing.subtract(Counter(tile for piece in pieces for tile in piece_tiles(piece)))
    return sorted(tile for tile, count in missing.items() for _ in range(max(count, 0)))


@dataclass(frozen=True)
class Term:
    """A signed disjoint union of pieces; ``sign == 0`` is the zero term."""

    pieces: Tuple[Piece, ...] = ()
    sign: int = 1

    @classmethod
    def zero(cls) -> 'Term':
        return cls((), 0)

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    def components(self) -> tuple:
        return tuple(materialize(piece) for piece in self.pieces)

    def element(self) -> RElement:
        if self.is_zero:
            return RElement.zero()
        return RElement.of(*self.components(), sign=self.sign)

    def tiles(self) -> List[TileRef]:
        return [tile for piece in self.pieces for tile in piece_tiles(piece)]

    def describe(self) -> List[str]:
        if self.is_zero:
            return ['0']
        prefix = '+' if self.sign > 0 else '-'
        return [f"{prefix} {format_component(component)}" for component in self.components()]


@dataclass
class ResolutionReport:
    """Outcome of a resolution or grafting.

    Attributes:
        case: Tag naming the construction that was applied.
        hosts: The input strands; ``None`` stands for a single-edge input.
        with_overlap: The summand holding the overlap (3 and 4, or 34).
        without_overlap: The other summand (5 and 6, or 56).
        y_with: Host tiles whose y-variables multiply ``with_overlap``;
            ``None`` asks the Laurent layer to complete a matching instead.
        y_without: Same for ``without_overlap``.
        notes: Case details such as minimality of the grafting edges.
    """

    case: str
    hosts: Tuple[Optional[Strand], ...]
    with_overlap: Term
    without_overlap: Term
    y_with: Optional[Tuple[TileRef, ...]] = ()
    y_without: Optional[Tuple[TileRef, ...]] = None
    notes: Dict[str, object] = field(default_factory=dict)

    @property
    def result(self) -> RElement:
        return self.with_overlap.element() + self.without_overlap.element()

    def host_tiles(self) -> List[TileRef]:
        return [tile for host in self.hosts if host is not None for tile in piece_tiles(host)]

    def missing_tiles(self, term: Term) -> List[TileRef]:
        return missing_tiles(self.hosts, term.pieces)

    def describe(self) -> List[str]:
        lines = [f"case: {self.case}"]
        lines.append("with overlap:")
        lines.extend(f"  {line}" for line in self.with_overlap.describe())
        lines.append("without overlap:")
        lines.extend(f"  {line}" for line in self.without_overlap.describe())
        for key in sorted(self.notes):
            lines.append(f"{key}: {self.notes[key]}")
        return lines
