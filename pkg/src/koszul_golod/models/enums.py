"""Enums for the Koszul/Golod engine."""

from enum import Enum


class ResponseFormat(str, Enum):
    """Output format for tool responses."""

    MARKDOWN = "markdown"
    JSON = "json"


class TermOrderKind(str, Enum):
    """Monomial order used by Gröbner computations."""

    GREVLEX = "grevlex"
    LEX = "lex"
    WEIGHTED_LEX = "weighted-lex"


class Branch(str, Enum):
    """Pipeline branch selected after the trivial fiber reduction."""

    ARTINIAN = "artinian"
    DIM2 = "dim2"
    DIM3_NONARTINIAN = "dim3-nonartinian-e>=4"
    E3 = "e=3"
    POLYNOMIAL = "polynomial"
    OUT_OF_SCOPE = "out-of-scope"


class KoszulVerdict(str, Enum):
    """Outcome of the Koszul test."""

    KOSZUL_TO_BOUND = "koszul-to-bound"
    NON_KOSZUL = "non-koszul"


class CertificateStatus(str, Enum):
    """Outcome of witness verification."""

    GOLOD_AND_KOSZUL = "golod-and-koszul"
    GOLOD_NOT_KOSZUL = "golod-map-not-koszul"
    NOT_GOLOD = "not-golod"
    INCONCLUSIVE = "inconclusive"


class CandidateSource(str, Enum):
    """Where a witness candidate came from."""

    PRESCRIBED = "prescribed"
    TRIVIAL = "trivial"
    RELATION_SUBSET = "relation-subset"
    RANDOM = "random"
    EXPLICIT = "explicit"
