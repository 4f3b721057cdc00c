"""
Exception hierarchy for the snake graph calculus engine.
"""

from typing import Optional


class SnakeCalculusError(Exception):
    """Base class for all engine errors."""


class GraphError(SnakeCalculusError):
    """Invalid graph construction or query (bad index, non-interior edge, ...)."""


class ResolutionError(SnakeCalculusError):
    """A resolution or grafting was requested on input it does not apply to."""


class SurfaceError(SnakeCalculusError):
    """Inconsistent triangulation, crossing sequence or loop description."""


class ParseError(SnakeCalculusError):
    """Text input could not be parsed."""

    def __init__(self, message: str, line_no: Optional[int] = None, source: Optional[str] = None):
        self.message = message
        self.line_no = line_no
        self.source = source
        super().__init__(self._render())

    def _render(self) -> str:
        where = self.source or '<input>'
        if self.line_no is not None:
            return f"{where}:{self.line_no}: {self.message}"
        return f"{where}: {self.message}"
