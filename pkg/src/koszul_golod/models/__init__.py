"""Pydantic input and report models."""

from .enums import Branch, CandidateSource, CertificateStatus, KoszulVerdict, ResponseFormat
from .inputs import AnalyzeInput, Bounds, ClassifyInput, CorpusInput, WitnessInput
from .reports import (
    BettiTable,
    ClassificationReport,
    CorpusEntry,
    CorpusReport,
    GolodCertificate,
    KoszulReport,
    WitnessSearchResult,
)

__all__ = [
    "Branch",
    "CandidateSource",
    "CertificateStatus",
    "KoszulVerdict",
    "ResponseFormat",
    "AnalyzeInput",
    "Bounds",
    "ClassifyInput",
    "CorpusInput",
    "WitnessInput",
    "BettiTable",
    "ClassificationReport",
    "CorpusEntry",
    "CorpusReport",
    "GolodCertificate",
    "KoszulReport",
    "WitnessSearchResult",
]
