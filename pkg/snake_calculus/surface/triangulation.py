"""
Triangulated unpunctured surfaces and the curves drawn on them.

A surface is given combinatorially by its triangles, each a clockwise triple
of sides. Side ids starting with ``b`` are boundary segments, every other id
is an arc of the triangulation. Curves are crossing sequences that walk from a
start triangle across the listed arcs.

File format::

    # torus with one boundary component
    triangle: 3 1 2
    triangle: 4 b 3
    boundary: b
    arc gamma: start=3 1 3 4
    loop zeta: 1 3 4 base=3
"""

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import networkx as nx

from ..errors import ParseError, SurfaceError

logger = logging.getLogger(__name__)

Triangle = Tuple[str, str, str]


def is_boundary_id(side: str) -> bool:
    return side.startswith('b')


def _arc_key(side: str):
    return (0, int(side), '') if side.isdigit() else (1, 0, side)


@dataclass(frozen=True)
class ArcSpec:
    """A (generalized) arc given by the arcs it crosses.

    Attributes:
        name: Name used in reports.
        start: Index (1-based) of the triangle the curve starts in.
        crossings: Arcs crossed, in order.
        rel: Relative orientation of the first tile.
        kinks: Number of contractible kinks.
        monogon: The curve cuts out a contractible monogon.
        arc: Set when the curve is the arc ``arc`` of the triangulation itself.
    """

    name: str
    start: int = 1
    crossings: Tuple[str, ...] = ()
    rel: int = 1
    kinks: int = 0
    monogon: bool = False
    arc: Optional[str] = None


@dataclass(frozen=True)
class LoopSpec:
    """A closed loop; ``base`` holds the point where the loop is cut open.

    The loop leaves ``base`` across ``crossings[0]`` and comes back across
    ``crossings[-1]``. An empty crossing sequence is a contractible loop.
    """

    name: str
    crossings: Tuple[str, ...] = ()
    base: int = 1
    kinks: int = 0


Curve = Union[ArcSpec, LoopSpec]


@dataclass
class Triangulation:
    """Triangles of a triangulation and the curves declared alongside them."""

    triangles: List[Triangle]
    curves: Dict[str, Curve] = field(default_factory=dict)
    source: Optional[str] = None

    def __post_init__(self):
        self._validate()

    @property
    def arcs(self) -> List[str]:
        sides = {side for triangle in self.triangles for side in triangle if not is_boundary_id(side)}
        return sorted(sides, key=_arc_key)

    @property
    def boundary(self) -> List[str]:
        return sorted({side for triangle in self.triangles for side in triangle if is_boundary_id(side)})

    def _validate(self) -> None:
        counts: Dict[str, int] = {}
        for index, triangle in enumerate(self.triangles, start=1):
            if len(set(triangle)) != 3:
                raise SurfaceError(f"Triangle {index} has repeated sides {' '.join(triangle)}")
            for side in triangle:
                counts[side] = counts.get(side, 0) + 1
        for side, count in counts.items():
            expected = 1 if is_boundary_id(side) else 2
            if count != expected:
                raise SurfaceError(f"Side {side} lies in {count} triangles, expected {expected}")
        if not nx.is_connected(self.dual_graph()):
            raise SurfaceError("Triangles do not form a connected surface")
        logger.debug(f"Triangulation with {len(self.arcs)} arcs, {len(self.boundary)} boundary segments "
                     f"and {len(self.triangles)} triangles")

    def dual_graph(self) -> nx.MultiGraph:
        """Triangles as nodes, one edge per arc joining the two triangles it bounds."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(1, len(self.triangles) + 1))
        for arc in self.arcs:
            first, second = self.triangles_of(arc)
            graph.add_edge(first, second, key=arc)
        return graph

    def triangle(self, index: int) -> Triangle:
        if not 1 <= index <= len(self.triangles):
            raise SurfaceError(f"No triangle {index}; the surface has {len(self.triangles)}")
        return self.triangles[index - 1]

    def triangles_of(self, side: str) -> List[int]:
        return [i for i, triangle in enumerate(self.triangles, start=1) if side in triangle]

    def across(self, index: int, arc: str) -> int:
        """The triangle on the other side of ``arc``."""
        if arc not in self.triangle(index):
            raise SurfaceError(f"Arc {arc} is not a side of triangle {index}")
        if is_boundary_id(arc):
            raise SurfaceError(f"Curves cannot cross the boundary segment {arc}")
        first, second = self.triangles_of(arc)
        return second if first == index else first

    def succ(self, index: int, side: str) -> str:
        """The side following ``side`` in clockwise order."""
        triangle = self.triangle(index)
        return triangle[(triangle.index(side) + 1) % 3]

    def pred(self, index: int, side: str) -> str:
        triangle = self.triangle(index)
        return triangle[(triangle.index(side) - 1) % 3]

    def third(self, index: int, first: str, second: str) -> str:
        rest = [side for side in self.triangle(index) if side not in (first, second)]
        if len(rest) != 1:
            raise SurfaceError(f"Arcs {first} and {second} are not two sides of triangle {index}")
        return rest[0]

    def walk(self, start: int, crossings: Tuple[str, ...]) -> List[int]:
        """Triangles visited by a curve: ``start`` followed by one triangle per crossing."""
        visited = [start]
        for j, arc in enumerate(crossings):
            if j > 0 and arc == crossings[j - 1]:
                raise SurfaceError(f"Curve crosses arc {arc} twice in a row")
            visited.append(self.across(visited[-1], arc))
        return visited

    def exchange_matrix(self) -> Dict[str, Dict[str, int]]:
        """Signed adjacency: b_ij gains 1 in each triangle where arc j follows arc i clockwise."""
        arcs = self.arcs
        matrix = {i: {j: 0 for j in arcs} for i in arcs}
        for triangle in self.triangles:
            for k in range(3):
                i, j = triangle[k], triangle[(k + 1) % 3]
                if is_boundary_id(i) or is_boundary_id(j):
                    continue
                matrix[i][j] += 1
                matrix[j][i] -= 1
        return matrix

    def curve(self, name: str) -> Curve:
        if name not in self.curves:
            known = ', '.join(sorted(self.curves)) or 'none'
            raise SurfaceError(f"Unknown curve {name!r} (known: {known})")
        return self.curves[name]


_TRIANGLE = re.compile(r'^triangle\s*:\s*(.+)$')
_BOUNDARY = re.compile(r'^boundary\s*:\s*(.*)$')
_CURVE = re.compile(r'^(arc|loop)(?:\s+([\w\'-]+))?\s*:\s*(.*)$')


def _parse_curve(kind: str, name: str, body: str, line_no: int, source: Optional[str]) -> Curve:
    options: Dict[str, str] = {}
    crossings: List[str] = []
    flags = set()
    for token in body.split():
        if '=' in token:
            key, value = token.split('=', 1)
            options[key] = value
        elif token in ('monogon', 'contractible'):
            flags.add(token)
        else:
            crossings.append(token)
    try:
        kinks = int(options.pop('kinks', '0'))
        if kind == 'loop':
            base = int(options.pop('base', '1'))
            if 'contractible' in flags:
                crossings = []
            spec = LoopSpec(name, tuple(crossings), base, kinks)
        else:
            start = int(options.pop('start', '1'))
            rel = int(options.pop('rel', '+1'))
            spec = ArcSpec(name, start, tuple(crossings), rel, kinks, 'monogon' in flags, options.pop('is', None))
    except ValueError as e:
        raise ParseError(f"Bad number in {kind} line: {e}", line_no, source)
    if options:
        raise ParseError(f"Unknown {kind} options: {', '.join(sorted(options))}", line_no, source)
    return spec


def parse_surface(text: str, source: Optional[str] = None) -> Triangulation:
    triangles: List[Triangle] = []
    curves: Dict[str, Curve] = {}
    declared: Optional[List[str]] = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        match = _TRIANGLE.match(line)
        if match:
            sides = match.group(1).split()
            if len(sides) != 3:
                raise ParseError(f"Triangle needs three sides, got {len(sides)}", line_no, source)
            triangles.append(tuple(sides))
            continue
        match = _BOUNDARY.match(line)
        if match:
            declared = (declared or []) + match.group(1).split()
            bad = [side for side in declared if not is_boundary_id(side)]
            if bad:
                raise ParseError(f"Boundary segment ids must start with b: {', '.join(bad)}", line_no, source)
            continue
        match = _CURVE.match(line)
        if match:
            kind, name, body = match.groups()
            name = name or f"{kind}{len(curves) + 1}"
            if name in curves:
                raise ParseError(f"Curve {name} declared twice", line_no, source)
            curves[name] = _parse_curve(kind, name, body, line_no, source)
            continue
        raise ParseError(f"Cannot parse line: {line!r}", line_no, source)
    if not triangles:
        raise ParseError("No triangles declared", None, source)
    surface = Triangulation(triangles, curves, source)
    if declared is not None and sorted(declared) != surface.boundary:
        raise SurfaceError(f"Declared boundary {' '.join(sorted(declared))} does not match the triangles "
                           f"({' '.join(surface.boundary)})")
    return surface


def load_surface(path: Union[str, Path]) -> Triangulation:
    path = Path(path)
    with open(path, 'r', encoding='utf-8') as f:
        return parse_surface(f.read(), str(path))


def fixture_path(name: str) -> Path:
    """Path of a surface shipped with the package (``torus``, ``annulus`` or ``annulus2``)."""
    path = Path(__file__).parent / 'fixtures' / f"{name}.txt"
    if not path.exists():
        raise SurfaceError(f"No surface fixture named {name!r}")
    return path
