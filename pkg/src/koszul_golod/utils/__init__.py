"""Utility functions: errors, linear algebra, formatting."""

from .errors import KoszulGolodError, _handle_engine_error
from .formatting import _truncate_response

__all__ = [
    "KoszulGolodError",
    "_handle_engine_error",
    "_truncate_response",
]
