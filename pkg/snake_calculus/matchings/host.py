"""
Plain-graph view of a strand: vertices, edges and planar coordinates.

Each cell has four corners ``SW``, ``NE``, ``M+`` and ``M-``; the edge with key
``(position, sign)`` joins the corner ``position`` with ``M<sign>``. A joint of
sign s between cells j and k identifies the corners ``j:NE = k:Ms`` and
``j:Ms = k:SW``, which glues ``j:(NE, s)`` onto ``k:(SW, s)``.
"""

from typing import Dict, Iterable, List, Optional, Set, Tuple

from ..errors import GraphError
from ..graphs.base import KEY_ORDER, NE, SW, EdgeKey, side_of, tile_sign
from ..graphs.snake import EdgeRef
from ..graphs.strand import Strand

Corner = Tuple[int, str]

CORNERS = ('SW', 'M+', 'M-', 'NE')


def _mid(sign: int) -> str:
    return 'M+' if sign > 0 else 'M-'


class HostGraph:
    """Vertices and edges of the snake or band graph described by a strand."""

    def __init__(self, strand: Strand):
        self.strand = strand
        self.d = strand.d
        self._parent: Dict[Corner, Corner] = {}
        for j in range(1, self.d + 1):
            for corner in CORNERS:
                self._parent[(j, corner)] = (j, corner)

        for j, sign in enumerate(strand.joints, start=1):
            self._glue(j, j + 1, sign)
        if strand.is_closed:
            self._glue(self.d, 1, strand.closing)

        classes: Dict[Corner, List[Corner]] = {}
        for j in range(1, self.d + 1):
            for corner in CORNERS:
                classes.setdefault(self._find((j, corner)), []).append((j, corner))
        ordered = sorted(classes.values(), key=lambda members: min(_corner_key(m) for m in members))
        self.vertex_of: Dict[Corner, int] = {}
        for index, members in enumerate(ordered):
            for member in members:
                self.vertex_of[member] = index
        self.vertices: List[int] = list(range(len(ordered)))

        self.edge_ids: Dict[Tuple[int, EdgeKey], EdgeRef] = {}
        self.endpoints: Dict[EdgeRef, Tuple[int, int]] = {}
        self.incidences: Dict[EdgeRef, List[Tuple[int, EdgeKey]]] = {}
        self.loops: Set[EdgeRef] = set()
        for j in range(1, self.d + 1):
            for key in KEY_ORDER:
                ref = self._edge_ref(j, key)
                self.edge_ids[(j, key)] = ref
                self.incidences.setdefault(ref, []).append((j, key))
                u = self.vertex_of[(j, key[0])]
                v = self.vertex_of[(j, _mid(key[1]))]
                if u == v:
                    self.loops.add(ref)
                    continue
                ends = (min(u, v), max(u, v))
                if self.endpoints.setdefault(ref, ends) != ends:
                    raise GraphError(f"Edge {ref} glued inconsistently")

        self.adjacency: Dict[int, List[Tuple[EdgeRef, int]]] = {v: [] for v in self.vertices}
        for ref in sorted(self.endpoints):
            u, v = self.endpoints[ref]
            self.adjacency[u].append((ref, v))
            self.adjacency[v].append((ref, u))

    def _find(self, corner: Corner) -> Corner:
        while self._parent[corner] != corner:
            self._parent[corner] = self._parent[self._parent[corner]]
            corner = self._parent[corner]
        return corner

    def _union(self, a: Corner, b: Corner) -> None:
        ra, rb = self._find(a), self._find(b)
        if ra != rb:
            self._parent[max(ra, rb, key=_corner_key)] = min(ra, rb, key=_corner_key)

    def _glue(self, j: int, k: int, sign: int) -> None:
        self._union((j, 'NE'), (k, _mid(sign)))
        self._union((j, _mid(sign)), (k, 'SW'))

    def _edge_ref(self, j: int, key: EdgeKey) -> EdgeRef:
        position, sign = key
        joints = self.strand.joints
        if position == NE and j < self.d and joints[j - 1] == sign:
            return EdgeRef(j, side_of(key, tile_sign(j)))
        if position == SW and j > 1 and joints[j - 2] == sign:
            return EdgeRef(j - 1, side_of((NE, sign), tile_sign(j - 1)))
        if self.strand.is_closed and sign == self.strand.closing:
            if (position == NE and j == self.d) or (position == SW and j == 1):
                return EdgeRef(1, side_of((SW, sign), tile_sign(1)))
        return EdgeRef(j, side_of(key, tile_sign(j)))

    @property
    def edges(self) -> List[EdgeRef]:
        return sorted(self.endpoints)

    def edge_at(self, j: int, key: EdgeKey) -> EdgeRef:
        return self.edge_ids[(j, key)]

    def joint_ref(self, k: int) -> EdgeRef:
        """The edge glued at joint k (k = d is the closing joint of a band)."""
        if k < self.d:
            return self.edge_at(k, (NE, self.strand.joints[k - 1]))
        if self.strand.is_closed and k == self.d:
            return self.edge_at(1, (SW, self.strand.closing))
        raise GraphError(f"No joint {k} in a strand with {self.d} cells")

    def is_boundary(self, ref: EdgeRef) -> bool:
        return len(self.incidences[ref]) == 1

    def is_perfect(self, edges: Iterable[EdgeRef]) -> bool:
        covered = []
        for ref in edges:
            if ref not in self.endpoints:
                return False
            covered.extend(self.endpoints[ref])
        return len(covered) == len(self.vertices) and set(covered) == set(self.vertices)

    def minimal_edges(self, kappa: Optional[int] = None) -> frozenset:
        """The all-boundary matching with SW edges of sign kappa and NE edges of sign -kappa."""
        kappa = self.strand.kappa if kappa is None else kappa
        chosen = set()
        for ref, places in self.incidences.items():
            if len(places) != 1 or ref in self.loops:
                continue
            _, (position, sign) = places[0]
            if (position == SW and sign == kappa) or (position == NE and sign == -kappa):
                chosen.add(ref)
        return frozenset(chosen)

    def tile_positions(self) -> List[Tuple[int, int]]:
        if self.strand.is_closed:
            raise GraphError("Band graphs have no planar embedding")
        x, y = 0, 0
        positions = [(x, y)]
        for j, sign in enumerate(self.strand.joints, start=1):
            if sign == tile_sign(j):
                x += 1
            else:
                y += 1
            positions.append((x, y))
        return positions

    def coordinates(self) -> Dict[int, Tuple[int, int]]:
        """Planar position of every vertex of an open strand."""
        coords: Dict[int, Tuple[int, int]] = {}
        for j, (x, y) in enumerate(self.tile_positions(), start=1):
            a = tile_sign(j)
            corners = {'SW': (x, y), 'NE': (x + 1, y + 1), _mid(a): (x + 1, y), _mid(-a): (x, y + 1)}
            for corner, point in corners.items():
                vertex = self.vertex_of[(j, corner)]
                if coords.setdefault(vertex, point) != point:
                    raise GraphError(f"Vertex {vertex} placed at {coords[vertex]} and {point}")
        return coords


def _corner_key(corner: Corner) -> Tuple[int, int]:
    return (corner[0], CORNERS.index(corner[1]))
