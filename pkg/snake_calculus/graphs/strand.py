"""
Strands: snake graphs written as sign words over labeled cells.

Every resolution is assembled from pieces of its input graphs. A strand keeps
each tile as a :class:`Cell` whose edges are addressed by sign-frame keys
(``(SW, +)``, ``(SW, -)``, ``(NE, +)``, ``(NE, -)``) together with the sign of
each joint between consecutive cells. Reversing a piece, changing its frame and
gluing pieces are then operations on words, and a cell always remembers which
tile of which input it came from.
"""

import logging
from dataclasses import dataclass, replace
from typing import Optional, Tuple, Union

from ..errors import GraphError
from .base import KEY_ORDER, NE, SW, SIDE_ORDER, EdgeKey, key_of, side_of, swap_position, tile_sign
from .snake import Direction, EdgeGraph, EdgeRef, SnakeGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Origin:
    """Where a cell came from: tile ``index`` of input graph ``host``."""

    host: int
    index: int
    turned: bool = False
    frame: int = 1

    def host_key(self, key: EdgeKey) -> EdgeKey:
        """Key in the source tile of the edge addressed here by ``key``."""
        position, sign = key
        if self.turned:
            position = swap_position(position)
        return (position, sign * self.frame)


@dataclass(frozen=True)
class Cell:
    """A tile with labels stored by edge key in ``KEY_ORDER``."""

    label: Optional[str] = None
    sides: Tuple[Optional[str], ...] = (None, None, None, None)
    origin: Optional[Origin] = None

    def side(self, key: EdgeKey) -> Optional[str]:
        return self.sides[KEY_ORDER.index(key)]

    def scaled(self, c: int) -> 'Cell':
        if c == 1:
            return self
        sides = tuple(self.side((position, sign * c)) for position, sign in KEY_ORDER)
        origin = replace(self.origin, frame=self.origin.frame * c) if self.origin else None
        return Cell(self.label, sides, origin)

    def turned(self) -> 'Cell':
        sides = tuple(self.side((swap_position(position), sign)) for position, sign in KEY_ORDER)
        origin = replace(self.origin, turned=not self.origin.turned) if self.origin else None
        return Cell(self.label, sides, origin)


@dataclass(frozen=True)
class EdgePiece:
    """A single edge cut out of a strand, remembered with its cell."""

    cell: Cell
    key: EdgeKey

    @property
    def label(self) -> Optional[str]:
        return self.cell.side(self.key)

    def to_graph(self) -> EdgeGraph:
        return EdgeGraph(self.label)


@dataclass(frozen=True)
class Strand:
    """Cells joined by signed joints; ``closing`` is set for band graphs.

    Attributes:
        cells: The tiles in order.
        joints: ``joints[i-1]`` is the sign of the edge shared by cells i and i+1.
        kappa: Sign of the south-west edges in the minimal matching.
        closing: Sign of the glue edge from the last cell back to the first.
    """

    cells: Tuple[Cell, ...]
    joints: Tuple[int, ...]
    kappa: int = 1
    closing: Optional[int] = None

    def __post_init__(self):
        if not self.cells:
            raise GraphError("A strand needs at least one cell")
        if len(self.joints) != len(self.cells) - 1:
            raise GraphError(f"{len(self.cells)} cells need {len(self.cells) - 1} joints, got {len(self.joints)}")

    @property
    def d(self) -> int:
        return len(self.cells)

    @property
    def is_closed(self) -> bool:
        return self.closing is not None

    def cyclic_joints(self) -> Tuple[int, ...]:
        if self.closing is None:
            raise GraphError("Open strand has no cyclic sign word")
        return self.joints + (self.closing,)

    def sub(self, i: int, j: int) -> 'Strand':
        if not 1 <= i <= j <= self.d:
            raise GraphError(f"Invalid window [{i},{j}] on a strand with {self.d} cells")
        return Strand(self.cells[i - 1:j], self.joints[i - 1:j - 1], self.kappa)

    def scaled(self, c: int) -> 'Strand':
        closing = self.closing * c if self.closing is not None else None
        return Strand(tuple(cell.scaled(c) for cell in self.cells),
                      tuple(sign * c for sign in self.joints), self.kappa * c, closing)

    def turned(self) -> 'Strand':
        """Reverse the tile order (a rotation by 180 degrees)."""
        return Strand(tuple(cell.turned() for cell in reversed(self.cells)),
                      tuple(reversed(self.joints)), -self.kappa, self.closing)

    def joined(self, joint: int, other: 'Strand') -> 'Strand':
        if self.is_closed or other.is_closed:
            raise GraphError("Cannot glue closed strands")
        if other.kappa != self.kappa:
            logger.debug(f"Gluing strands with kappa {self.kappa} and {other.kappa}; keeping {self.kappa}")
        return Strand(self.cells + other.cells, self.joints + (joint,) + other.joints, self.kappa)

    def closed(self, closing: int) -> 'Strand':
        return Strand(self.cells, self.joints, self.kappa, closing)

    def cut(self, k: int) -> 'Strand':
        """Open a closed strand at its k-th joint (joint d is the closing joint)."""
        full = self.cyclic_joints()
        if not 1 <= k <= self.d:
            raise GraphError(f"Joint {k} out of range 1..{self.d}")
        return Strand(self.cells[k:] + self.cells[:k], full[k:] + full[:k - 1], self.kappa)

    def first_joint(self, target: int, start: int = 1) -> Optional[int]:
        for j in range(max(start, 1), self.d):
            if self.joints[j - 1] == target:
                return j
        return None

    def last_joint(self, target: int, stop: Optional[int] = None) -> Optional[int]:
        stop = self.d - 1 if stop is None else min(stop, self.d - 1)
        for j in range(stop, 0, -1):
            if self.joints[j - 1] == target:
                return j
        return None

    def drop_pred(self, target: int, start: int = 1) -> Union['Strand', EdgePiece]:
        """Remove everything up to the first edge of sign ``target`` in Int from ``start`` on, then NE."""
        j = self.first_joint(target, start)
        if j is None:
            return EdgePiece(self.cells[-1], (NE, target))
        return self.sub(j + 1, self.d)

    def drop_succ(self, target: int, stop: Optional[int] = None) -> Union['Strand', EdgePiece]:
        """Remove everything after the last edge of sign ``target`` in Int up to ``stop``, then SW."""
        j = self.last_joint(target, stop)
        if j is None:
            return EdgePiece(self.cells[0], (SW, target))
        return self.sub(1, j)

    def interior_piece(self, j: int) -> EdgePiece:
        return EdgePiece(self.cells[j - 1], (NE, self.joints[j - 1]))

    def to_snake(self) -> SnakeGraph:
        """Materialize in the frame where the first south edge has sign +."""
        if self.is_closed:
            raise GraphError("Closed strand materializes as a band graph")
        steps = tuple(
            Direction.EAST if sign == tile_sign(i) else Direction.NORTH
            for i, sign in enumerate(self.joints, start=1)
        )
        tile_labels = None
        if all(cell.label is not None for cell in self.cells):
            tile_labels = tuple(cell.label for cell in self.cells)
        edge_labels = None
        if all(label is not None for cell in self.cells for label in cell.sides):
            rows = []
            for j, cell in enumerate(self.cells, start=1):
                a = tile_sign(j)
                row = [cell.side(key_of(side, a)) for side in SIDE_ORDER]
                if j > 1:
                    shared = (SW, self.joints[j - 2])
                    below = self.cells[j - 2].side((NE, self.joints[j - 2]))
                    if cell.side(shared) != below:
                        logger.warning(f"Glued edge between tiles {j - 1} and {j} has labels "
                                       f"{below} and {cell.side(shared)}; keeping {below}")
                        row[SIDE_ORDER.index(side_of(shared, a))] = below
                rows.append(tuple(row))
            edge_labels = tuple(rows)
        return SnakeGraph(steps, tile_labels=tile_labels, edge_labels=edge_labels, rel=self.kappa)

    @classmethod
    def from_snake(cls, graph: SnakeGraph, host: Optional[int] = None) -> 'Strand':
        cells = []
        for j in range(1, graph.d + 1):
            a = tile_sign(j)
            sides = tuple(graph.edge_label(EdgeRef(j, side_of(key, a))) for key in KEY_ORDER)
            origin = Origin(host, j) if host is not None else None
            cells.append(Cell(graph.tile_label(j), sides, origin))
        return cls(tuple(cells), graph.signs(), graph.rel)


Piece = Union[Strand, EdgePiece]
