"""Tool functions: validated input model in, markdown or JSON text out."""

from .analysis import koszul_golod_analyze
from .classification import koszul_golod_classify, koszul_golod_corpus
from .witness import koszul_golod_witness

__all__ = [
    "koszul_golod_analyze",
    "koszul_golod_witness",
    "koszul_golod_classify",
    "koszul_golod_corpus",
]
