"""Error types and error formatting for the Koszul/Golod engine."""

import logging
from typing import Optional

logger = logging.getLogger(__name__)


class KoszulGolodError(Exception):
    """Base class for every error raised by the engine."""

    hint: Optional[str] = None

    def __init__(self, message: str, hint: Optional[str] = None):
        super().__init__(message)
        if hint is not None:
            self.hint = hint


class ParseError(KoszulGolodError):
    """Malformed polynomial text or presentation file."""

    hint = "Terms look like 3/2*x^2*y; variables must be declared on the 'vars:' line."


class FieldError(KoszulGolodError):
    """Unsupported field specification."""

    hint = "Use QQ, GF(p) or GF(p)^k with p prime and k <= 4."


class PresentationError(KoszulGolodError):
    """Relations that do not define a minimal quadratic presentation."""

    hint = "Relations must be homogeneous quadrics, linearly independent in Q_2."

    def __init__(
        self,
        message: str,
        dependency: Optional[dict] = None,
        hint: Optional[str] = None,
    ):
        super().__init__(message, hint)
        self.dependency = dependency or {}


class SingularMatrixError(KoszulGolodError):
    """Change of variables with a singular matrix."""

    hint = "The change of variables must be invertible over the coefficient field."


class TruncationError(KoszulGolodError):
    """A computation needed a degree beyond the truncation bound."""

    hint = "Raise --trunc-int / --trunc-hom (KOSZUL_GOLOD_TRUNC_INT / _HOM)."


class ComplexError(KoszulGolodError):
    """Malformed chain complex data (non-cycle input, nonzero square)."""

    hint = "Adjoined variables must kill cycles of K_1 of internal degree 2."


class WitnessError(KoszulGolodError):
    """A precondition of witness verification failed."""

    hint = "Witness quadrics must lie in I and form a regular sequence of length <= 3."


class UnsupportedInputError(KoszulGolodError):
    """Input outside the range the witness search covers."""

    hint = "Witness search needs dim R_2 <= 3; use 'analyze' for general rings."


class UnknownCaseError(KoszulGolodError):
    """Condition check requested for a case id that does not exist."""

    hint = "Case ids are the keys of CONDITION_SETS in koszul_golod.algebra.conditions."


class CorpusError(KoszulGolodError):
    """The corpus file could not be read."""

    hint = "Check that the corpus JSON matches the CorpusEntry schema."


def _handle_engine_error(e: Exception) -> str:
    """
    Consistent error formatting across all tools.

    Args:
        e: The exception that occurred

    Returns:
        User-friendly error message
    """
    logger.error(f"{type(e).__name__}: {e}")
    if isinstance(e, KoszulGolodError):
        kind = type(e).__name__
        message = f"Error: {kind}: {e}"
        if isinstance(e, PresentationError) and e.dependency:
            terms = ", ".join(f"{c}*rel{i + 1}" for i, c in sorted(e.dependency.items()))
            message += f" (dependency: {terms} = 0)"
        if e.hint:
            message += f"\nHint: {e.hint}"
        return message
    if isinstance(e, FileNotFoundError):
        return f"Error: File not found: {e.filename}\nHint: Check the path."
    if isinstance(e, OSError):
        return f"Error: File not readable: {e}"
    if isinstance(e, ZeroDivisionError):
        return "Error: Division by zero in coefficient arithmetic."
    return f"Error: Unexpected error occurred: {str(e)}"
