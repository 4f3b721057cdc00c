"""
Snake graphs.

A snake graph is stored as its shape word (one step per interior edge);
coordinates, edges and sign functions are derived from the word.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from ..errors import GraphError
from .base import Direction, Side, SIDE_ORDER, key_of, tile_sign


Labels = Optional[Tuple[str, ...]]
EdgeLabels = Optional[Tuple[Tuple[Optional[str], ...], ...]]


@dataclass(frozen=True)
class EdgeRef:
    """An edge addressed by tile index and side; tile 0 is the single edge graph."""

    tile: int
    side: Side

    def sort_key(self) -> Tuple[int, int]:
        return (self.tile, SIDE_ORDER.index(self.side))

    def __lt__(self, other: 'EdgeRef') -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return f"({self.tile},{self.side.value})"


@dataclass(frozen=True)
class EdgeGraph:
    """The snake graph consisting of a single edge and its two vertices."""

    label: Optional[str] = None

    @property
    def d(self) -> int:
        return 0

    @property
    def is_labeled(self) -> bool:
        return self.label is not None

    def edges(self) -> List[EdgeRef]:
        return [EdgeRef(0, Side.S)]

    def word(self) -> str:
        return ''


@dataclass(frozen=True)
class SnakeGraph:
    """A snake graph with ``len(steps) + 1`` tiles.

    Attributes:
        steps: Step directions; step ``i`` places tile ``i+1`` relative to tile ``i``.
        tile_labels: Optional label per tile (the crossed arc).
        edge_labels: Optional per-tile labels in ``SIDE_ORDER`` (N, E, S, W).
        rel: Relative orientation of the first tile (+1 or -1).
    """

    steps: Tuple[Direction, ...] = ()
    tile_labels: Labels = None
    edge_labels: EdgeLabels = None
    rel: int = 1

    def __post_init__(self):
        if self.tile_labels is not None and len(self.tile_labels) != self.d:
            raise GraphError(f"Expected {self.d} tile labels, got {len(self.tile_labels)}")
        if self.edge_labels is not None and len(self.edge_labels) != self.d:
            raise GraphError(f"Expected {self.d} edge label rows, got {len(self.edge_labels)}")
        if self.rel not in (1, -1):
            raise GraphError(f"Relative orientation must be +1 or -1, got {self.rel}")
        positions = self.tile_positions()
        assert len(set(positions)) == len(positions), "snake word produced overlapping tiles"

    @property
    def d(self) -> int:
        return len(self.steps) + 1

    @property
    def is_labeled(self) -> bool:
        return self.tile_labels is not None and self.edge_labels is not None

    def word(self) -> str:
        return ''.join(step.value for step in self.steps)

    def tile_positions(self) -> List[Tuple[int, int]]:
        """South-west corner of every tile, tile 1 at the origin."""
        x, y = 0, 0
        positions = [(x, y)]
        for step in self.steps:
            if step is Direction.NORTH:
                y += 1
            else:
                x += 1
            positions.append((x, y))
        return positions

    def signs(self, seed: int = 1) -> Tuple[int, ...]:
        """Sign word: the value of the sign function on e_1, ..., e_{d-1}."""
        result = []
        for i, step in enumerate(self.steps, start=1):
            a = tile_sign(i, seed)
            result.append(a if step is Direction.EAST else -a)
        return tuple(result)

    def _check_tile(self, j: int) -> None:
        if not 1 <= j <= self.d:
            raise GraphError(f"Tile index {j} out of range 1..{self.d}")

    def interior_side(self, i: int) -> Side:
        """Side of tile ``i`` carrying the interior edge e_i."""
        if not 1 <= i < self.d:
            raise GraphError(f"No interior edge e_{i} in a snake graph with {self.d} tiles")
        return Side.N if self.steps[i - 1] is Direction.NORTH else Side.E

    def interior_edge(self, i: int) -> EdgeRef:
        return EdgeRef(i, self.interior_side(i))

    def canonical_edge(self, ref: EdgeRef) -> EdgeRef:
        """Representative of ``ref``: shared edges belong to the lower tile."""
        self._check_tile(ref.tile)
        j = ref.tile
        if j > 1:
            below = self.interior_side(j - 1)
            if ref.side is below.rotated():
                return EdgeRef(j - 1, below)
        return ref

    def interior_edges(self) -> List[EdgeRef]:
        return [self.interior_edge(i) for i in range(1, self.d)]

    def interior_index(self, ref: EdgeRef) -> Optional[int]:
        """Index ``i`` with ``ref == e_i``, or None for boundary edges."""
        ref = self.canonical_edge(ref)
        if ref.tile < self.d and ref.side is self.interior_side(ref.tile):
            return ref.tile
        return None

    def is_interior(self, ref: EdgeRef) -> bool:
        return self.interior_index(ref) is not None

    def edges(self) -> List[EdgeRef]:
        seen = {self.canonical_edge(EdgeRef(j, side)) for j in range(1, self.d + 1) for side in SIDE_ORDER}
        return sorted(seen)

    def boundary_edges(self) -> List[EdgeRef]:
        return [ref for ref in self.edges() if not self.is_interior(ref)]

    def sw_edges(self) -> List[EdgeRef]:
        """The two boundary edges ``_{SW}G`` of the first tile."""
        return [EdgeRef(1, Side.S), EdgeRef(1, Side.W)]

    def ne_edges(self) -> List[EdgeRef]:
        """The two boundary edges ``G^{NE}`` of the last tile."""
        return [EdgeRef(self.d, Side.N), EdgeRef(self.d, Side.E)]

    def tile_label(self, j: int) -> Optional[str]:
        self._check_tile(j)
        return self.tile_labels[j - 1] if self.tile_labels is not None else None

    def edge_label(self, ref: EdgeRef) -> Optional[str]:
        self._check_tile(ref.tile)
        if self.edge_labels is None:
            return None
        return self.edge_labels[ref.tile - 1][SIDE_ORDER.index(ref.side)]

    def unlabeled(self) -> 'SnakeGraph':
        return SnakeGraph(self.steps)


Component = Union[SnakeGraph, EdgeGraph]


@dataclass(frozen=True)
class SignAssignment:
    """One of the two sign functions of a snake graph."""

    graph: SnakeGraph
    seed: int
    values: Dict[EdgeRef, int]

    def __getitem__(self, ref: EdgeRef) -> int:
        return self.values[self.graph.canonical_edge(ref)]

    def __len__(self) -> int:
        return len(self.values)


def build_snake(steps: Iterable[Union[Direction, str]] = (), **labels) -> SnakeGraph:
    """Build a snake graph from directions or step letters (``R``/``U``)."""
    parsed = tuple(
        step if isinstance(step, Direction) else Direction.from_letter(step)
        for step in steps
    )
    return SnakeGraph(parsed, **labels)


def from_signs(signs: Sequence[int], seed: int = 1) -> SnakeGraph:
    """Snake graph whose sign word under ``seed`` is ``signs``."""
    steps = tuple(
        Direction.EAST if sign == tile_sign(i, seed) else Direction.NORTH
        for i, sign in enumerate(signs, start=1)
    )
    return SnakeGraph(steps)


def subgraph(graph: SnakeGraph, i: int, j: int) -> SnakeGraph:
    """The snake graph ``G[i, j]`` formed by tiles i..j."""
    if not 1 <= i <= j <= graph.d:
        raise GraphError(f"Invalid tile window [{i},{j}] for a snake graph with {graph.d} tiles")
    return SnakeGraph(
        graph.steps[i - 1:j - 1],
        tile_labels=graph.tile_labels[i - 1:j] if graph.tile_labels is not None else None,
        edge_labels=graph.edge_labels[i - 1:j] if graph.edge_labels is not None else None,
        rel=graph.rel * (-1) ** (i - 1),
    )


def reflect(graph: SnakeGraph) -> SnakeGraph:
    """Rotate by 180 degrees so that the tile order is reversed."""
    edge_labels = None
    if graph.edge_labels is not None:
        edge_labels = tuple(
            tuple(row[SIDE_ORDER.index(side.rotated())] for side in SIDE_ORDER)
            for row in reversed(graph.edge_labels)
        )
    return SnakeGraph(
        tuple(reversed(graph.steps)),
        tile_labels=tuple(reversed(graph.tile_labels)) if graph.tile_labels is not None else None,
        edge_labels=edge_labels,
        rel=graph.rel * (-1) ** (graph.d - 1),
    )


def sign_function(graph: SnakeGraph, seed: int = 1) -> SignAssignment:
    """The sign function with ``f(S of G_1) = seed``."""
    if seed not in (1, -1):
        raise GraphError(f"Sign seed must be +1 or -1, got {seed}")
    values: Dict[EdgeRef, int] = {}
    for j in range(1, graph.d + 1):
        a = tile_sign(j, seed)
        for side in SIDE_ORDER:
            ref = graph.canonical_edge(EdgeRef(j, side))
            sign = key_of(side, a)[1]
            if values.setdefault(ref, sign) != sign:
                raise GraphError(f"Inconsistent sign on shared edge {ref}")
    return SignAssignment(graph, seed, values)


def remove_pred(graph: SnakeGraph, ref: EdgeRef) -> Component:
    """``G \\ pred(e)``: drop every tile up to the edge ``e``."""
    ref = graph.canonical_edge(ref)
    i = graph.interior_index(ref)
    if i is not None:
        return subgraph(graph, i + 1, graph.d)
    if ref in graph.ne_edges():
        return EdgeGraph(graph.edge_label(ref))
    raise GraphError(f"remove_pred needs an interior or north-east edge, got {ref}")


def remove_succ(graph: SnakeGraph, ref: EdgeRef) -> Component:
    """``G \\ succ(e)``: drop every tile after the edge ``e``."""
    ref = graph.canonical_edge(ref)
    i = graph.interior_index(ref)
    if i is not None:
        return subgraph(graph, 1, i)
    if ref in graph.sw_edges():
        return EdgeGraph(graph.edge_label(ref))
    raise GraphError(f"remove_succ needs an interior or south-west edge, got {ref}")
