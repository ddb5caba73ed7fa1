"""Pydantic input models for the tool functions."""

from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field

from .. import config
from ..models.enums import ResponseFormat

# ============================================================================
# Shared pieces
# ============================================================================


class Bounds(BaseModel):
    """Truncation bounds (N, J) attached to every verdict."""

    model_config = ConfigDict(validate_assignment=True, extra="forbid")

    hom: int = Field(
        default_factory=lambda: config.TRUNC_HOM,
        description="Homological bound N: Tor_i is computed for i <= N",
        ge=1,
        le=40,
    )
    internal: int = Field(
        default_factory=lambda: config.TRUNC_INT,
        description="Internal bound J: every graded piece is computed for degrees <= J",
        ge=2,
        le=60,
    )

    def text(self) -> str:
        return f"({self.hom},{self.internal})"


class _ToolInput(BaseModel):
    model_config = ConfigDict(str_strip_whitespace=True, validate_assignment=True, extra="forbid")

    path: str = Field(..., description="Presentation file (field:, vars:, rel: lines)", min_length=1)
    field: Optional[str] = Field(
        default=None, description="Override the file's field, e.g. 'GF(2)', 'QQ', 'GF(3)^2'"
    )
    bounds: Bounds = Field(default_factory=Bounds, description="Truncation bounds (N, J)")
    response_format: ResponseFormat = Field(
        default=ResponseFormat.MARKDOWN,
        description="Output format: 'markdown' for human-readable or 'json' for machine-readable",
    )


# ============================================================================
# Input Models
# ============================================================================


class AnalyzeInput(_ToolInput):
    """Input model for Hilbert series, Betti table and Koszul analysis."""

    nu_route: bool = Field(default=True, description="Also run the ν^R(m) route of the Koszul test")
    golod: bool = Field(default=True, description="Also run the Golod-ring test")
    powers: List[int] = Field(
        default_factory=list, description="Exponents n for which ν^R(m^n) is checked"
    )


class WitnessInput(_ToolInput):
    """Input model for witness search or verification."""

    max_codim: int = Field(default=3, description="Largest witness codimension d", ge=0, le=3)
    seed: int = Field(default_factory=lambda: config.SEED, description="Seed of every random step")
    budget: int = Field(
        default_factory=lambda: config.BUDGET, description="Candidates verified before giving up", ge=1
    )
    quadrics: Optional[List[str]] = Field(
        default=None,
        description="Verify these quadrics instead of searching (polynomial text in the file's variables)",
    )


class ClassifyInput(_ToolInput):
    """Input model for the full classification pipeline."""

    seed: int = Field(default_factory=lambda: config.SEED, description="Seed of every random step")
    budget: int = Field(
        default_factory=lambda: config.BUDGET, description="Witness candidates verified", ge=1
    )


class CorpusInput(BaseModel):
    """Input model for running the shipped corpus."""

    model_config = ConfigDict(str_strip_whitespace=True, validate_assignment=True, extra="forbid")

    name: Optional[str] = Field(default=None, description="Run only the entry with this name")
    path: Optional[str] = Field(default=None, description="Corpus JSON file; defaults to the shipped corpus")
    bounds: Optional[Bounds] = Field(
        default=None, description="Override the per-entry bounds stored in the corpus"
    )
    response_format: ResponseFormat = Field(default=ResponseFormat.MARKDOWN, description="Output format")
