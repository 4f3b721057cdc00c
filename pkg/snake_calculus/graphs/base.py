"""
Shared vocabulary for snake and band graphs: step directions, tile sides and
the sign-frame edge keys used by every construction in the engine.

An edge of a tile is addressed either geometrically (``Side.N`` ...) or by its
key ``(position, sign)`` where position is ``SW`` for the south/west edges and
``NE`` for the north/east edges and sign is the value of the sign function on
that edge. On tile ``j`` with tile sign ``a_j`` (the sign of its south edge)::

    S = (SW, a_j)    W = (SW, -a_j)    N = (NE, -a_j)    E = (NE, a_j)
"""

from enum import Enum
from typing import Tuple


class Direction(Enum):
    """Position of the next tile relative to the current one."""

    NORTH = 'U'
    EAST = 'R'

    @classmethod
    def from_letter(cls, letter: str) -> 'Direction':
        for direction in cls:
            if direction.value == letter:
                return direction
        raise ValueError(f"Unknown step letter: {letter!r}")


class Side(Enum):
    """The four sides of a unit tile."""

    N = 'N'
    E = 'E'
    S = 'S'
    W = 'W'

    def rotated(self) -> 'Side':
        """Side after a 180 degree rotation of the tile."""
        return _ROTATED[self]

    def mirrored(self) -> 'Side':
        """Side after reflecting the tile in its SW-NE diagonal."""
        return _MIRRORED[self]


_ROTATED = {Side.N: Side.S, Side.S: Side.N, Side.E: Side.W, Side.W: Side.E}
_MIRRORED = {Side.N: Side.E, Side.E: Side.N, Side.S: Side.W, Side.W: Side.S}

# Order in which per-tile edge labels are stored.
SIDE_ORDER: Tuple[Side, ...] = (Side.N, Side.E, Side.S, Side.W)

SW = 'SW'
NE = 'NE'

EdgeKey = Tuple[str, int]

# Order of the four edge keys of a cell.
KEY_ORDER: Tuple[EdgeKey, ...] = ((SW, 1), (SW, -1), (NE, 1), (NE, -1))


def tile_sign(j: int, seed: int = 1) -> int:
    """Sign of the south edge of tile ``j`` (1-based) when tile 1 has ``seed``."""
    return seed if j % 2 == 1 else -seed


def key_of(side: Side, a: int) -> EdgeKey:
    """Edge key of ``side`` on a tile whose south edge has sign ``a``."""
    if side is Side.S:
        return (SW, a)
    if side is Side.W:
        return (SW, -a)
    if side is Side.N:
        return (NE, -a)
    return (NE, a)


def side_of(key: EdgeKey, a: int) -> Side:
    """Inverse of :func:`key_of`."""
    position, sign = key
    if position == SW:
        return Side.S if sign == a else Side.W
    return Side.E if sign == a else Side.N


def swap_position(position: str) -> str:
    return NE if position == SW else SW


def format_sign(sign: int) -> str:
    return '+' if sign > 0 else '-'
