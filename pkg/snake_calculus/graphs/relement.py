"""
Canonical forms and the group of signed formal sums of graph unions.
"""

from typing import Dict, Iterable, List, Tuple, Union

from .band import BandGraph, band_of_strand, strand_of_band
from .snake import EdgeGraph, SnakeGraph
from .strand import Strand
from .text_format import format_component

TermKey = Tuple[str, ...]


def _snake_candidates(graph: SnakeGraph) -> Iterable[SnakeGraph]:
    strand = Strand.from_snake(graph)
    for piece in (strand, strand.turned()):
        for c in (1, -1):
            yield piece.scaled(c).to_snake()


def _band_candidates(band: BandGraph) -> Iterable[BandGraph]:
    strand = strand_of_band(band)
    for piece in (strand, strand.turned()):
        for c in (1, -1):
            scaled = piece.scaled(c)
            full = scaled.cyclic_joints()
            for k in range(1, scaled.d + 1):
                yield band_of_strand(scaled.cut(k).closed(full[k - 1]))


def canonical_form(component) -> str:
    """Encoding shared by exactly the isomorphic copies of ``component``.

    Snake graphs are compared under reversal and the diagonal mirror, band
    graphs additionally under every rotation of the cyclic word.
    """
    if isinstance(component, EdgeGraph):
        return format_component(component)
    if isinstance(component, BandGraph):
        return min(format_component(band) for band in _band_candidates(component))
    if isinstance(component, SnakeGraph):
        return min(format_component(snake) for snake in _snake_candidates(component))
    raise TypeError(f"Not a graph component: {component!r}")


class RElement:
    """A signed formal sum of disjoint unions of graphs; the empty sum is zero."""

    def __init__(self, coefficients: Dict[TermKey, int] = None, representatives: Dict[TermKey, tuple] = None):
        self.coefficients = {k: v for k, v in (coefficients or {}).items() if v != 0}
        representatives = representatives or {}
        self.representatives = {k: representatives[k] for k in self.coefficients}

    @classmethod
    def zero(cls) -> 'RElement':
        return cls()

    @classmethod
    def of(cls, *components, sign: int = 1) -> 'RElement':
        """The single term ``sign * (c_1 ⊔ c_2 ⊔ ...)``."""
        key = tuple(sorted(canonical_form(c) for c in components))
        return cls({key: sign}, {key: tuple(components)})

    @classmethod
    def sum(cls, elements: Iterable['RElement']) -> 'RElement':
        total = cls.zero()
        for element in elements:
            total = total + element
        return total

    def is_zero(self) -> bool:
        return not self.coefficients

    def terms(self) -> List[Tuple[int, tuple]]:
        """``(coefficient, components)`` pairs in canonical order."""
        return [(self.coefficients[k], self.representatives[k]) for k in sorted(self.coefficients)]

    def keys(self) -> List[TermKey]:
        return sorted(self.coefficients)

    def __add__(self, other: 'RElement') -> 'RElement':
        coefficients = dict(self.coefficients)
        representatives = dict(self.representatives)
        for key, value in other.coefficients.items():
            coefficients[key] = coefficients.get(key, 0) + value
            representatives.setdefault(key, other.representatives[key])
        return RElement(coefficients, representatives)

    def __neg__(self) -> 'RElement':
        return RElement({k: -v for k, v in self.coefficients.items()}, self.representatives)

    def __sub__(self, other: 'RElement') -> 'RElement':
        return self + (-other)

    def union(self, other: 'RElement') -> 'RElement':
        """Disjoint union, extended bilinearly."""
        total = RElement.zero()
        for key_a, coef_a in self.coefficients.items():
            for key_b, coef_b in other.coefficients.items():
                key = tuple(sorted(key_a + key_b))
                components = self.representatives[key_a] + other.representatives[key_b]
                total = total + RElement({key: coef_a * coef_b}, {key: components})
        return total

    def __mul__(self, other: Union['RElement', int]) -> 'RElement':
        if isinstance(other, int):
            return RElement({k: v * other for k, v in self.coefficients.items()}, self.representatives)
        return self.union(other)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, RElement):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(frozenset(self.coefficients.items()))

    def __repr__(self) -> str:
        if self.is_zero():
            return "RElement.zero()"
        return " + ".join(f"{coef}*[{' ⊔ '.join(key)}]" for key, coef in sorted(self.coefficients.items()))
