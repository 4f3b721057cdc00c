"""
Line-oriented text format for snake graphs, band graphs and single edges.

Grammar (one record per line, ``#`` starts a comment)::

    snake: <word> [tiles=<l>,...] [edges=<N>,<E>,<S>,<W>|...] [rel=<+1|-1>]
    band: <word> glue=<S|W> [tiles=...] [edges=...] [rel=...]
    edge-graph: [<label>]

``<word>`` is a possibly empty word over ``R`` (east) and ``U`` (north).
Labels are only kept when both ``tiles`` and ``edges`` are given.
"""

from typing import Dict, List, Optional, Tuple

from ..errors import GraphError, ParseError
from .band import BandGraph
from .base import Direction, Side
from .snake import EdgeGraph, SnakeGraph

COMPONENT_KINDS = ('snake', 'band', 'edge-graph')


def _labels_suffix(graph: SnakeGraph) -> str:
    if not graph.is_labeled:
        return ''
    tiles = ','.join(graph.tile_labels)
    edges = '|'.join(','.join(row) for row in graph.edge_labels)
    rel = '+1' if graph.rel > 0 else '-1'
    return f" tiles={tiles} edges={edges} rel={rel}"


def format_component(component) -> str:
    """Render a snake graph, band graph or single edge as one line."""
    if isinstance(component, EdgeGraph):
        return f"edge-graph: {component.label}" if component.label is not None else "edge-graph:"
    if isinstance(component, BandGraph):
        return f"band: {component.word()} glue={component.glue.value}{_labels_suffix(component.base)}"
    if isinstance(component, SnakeGraph):
        word = component.word()
        head = f"snake: {word}" if word else "snake:"
        return head + _labels_suffix(component)
    raise GraphError(f"Cannot format {type(component).__name__}")


def _parse_word(word: str, line_no: Optional[int], source: Optional[str]) -> Tuple[Direction, ...]:
    bad = sorted(set(word) - {'R', 'U'})
    if bad:
        raise ParseError(f"Invalid step letters {''.join(bad)!r} in word {word!r}", line_no, source)
    return tuple(Direction.from_letter(letter) for letter in word)


def _parse_options(tokens: List[str], line_no, source) -> Dict[str, str]:
    options = {}
    for token in tokens:
        if '=' not in token:
            raise ParseError(f"Unexpected token {token!r}", line_no, source)
        key, value = token.split('=', 1)
        if key in options:
            raise ParseError(f"Duplicate option {key!r}", line_no, source)
        options[key] = value
    return options


def _parse_labeled(steps, options, line_no, source) -> SnakeGraph:
    tile_labels = edge_labels = None
    if 'tiles' in options or 'edges' in options:
        if 'tiles' not in options or 'edges' not in options:
            raise ParseError("Labeled graphs need both tiles= and edges=", line_no, source)
        tile_labels = tuple(options.pop('tiles').split(','))
        rows = options.pop('edges').split('|')
        edge_labels = tuple(tuple(row.split(',')) for row in rows)
        if any(len(row) != 4 for row in edge_labels):
            raise ParseError("Every tile needs four edge labels N,E,S,W", line_no, source)
    rel = options.pop('rel', '+1')
    if rel not in ('+1', '-1', '1'):
        raise ParseError(f"rel must be +1 or -1, got {rel!r}", line_no, source)
    if options:
        raise ParseError(f"Unknown options: {', '.join(sorted(options))}", line_no, source)
    try:
        return SnakeGraph(steps, tile_labels=tile_labels, edge_labels=edge_labels, rel=-1 if rel == '-1' else 1)
    except GraphError as e:
        raise ParseError(str(e), line_no, source)


def parse_component(line: str, line_no: Optional[int] = None, source: Optional[str] = None):
    """Parse a single component line."""
    if ':' not in line:
        raise ParseError(f"Expected '<kind>: ...', got {line.strip()!r}", line_no, source)
    kind, rest = line.split(':', 1)
    kind = kind.strip()
    tokens = rest.split()
    if kind == 'edge-graph':
        if len(tokens) > 1:
            raise ParseError("edge-graph takes at most one label", line_no, source)
        return EdgeGraph(tokens[0] if tokens else None)
    if kind not in ('snake', 'band'):
        raise ParseError(f"Unknown record kind {kind!r}", line_no, source)
    word = ''
    if tokens and '=' not in tokens[0]:
        word = tokens.pop(0)
    steps = _parse_word(word, line_no, source)
    options = _parse_options(tokens, line_no, source)
    glue = options.pop('glue', None)
    graph = _parse_labeled(steps, options, line_no, source)
    if kind == 'snake':
        if glue is not None:
            raise ParseError("glue= is only valid for band records", line_no, source)
        return graph
    if glue not in ('S', 'W'):
        raise ParseError(f"band records need glue=S or glue=W, got {glue!r}", line_no, source)
    return BandGraph(graph, Side(glue))


def iter_records(text: str):
    """Yield ``(line_no, stripped line)`` for non-blank, non-comment lines."""
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if line:
            yield line_no, line


def parse_components(text: str, source: Optional[str] = None) -> List:
    """Parse every component record in ``text``; other record kinds are rejected."""
    components = []
    for line_no, line in iter_records(text):
        components.append(parse_component(line, line_no, source))
    return components
