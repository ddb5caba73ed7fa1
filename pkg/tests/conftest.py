"""Pytest configuration and fixtures."""

import sys
from pathlib import Path

import pytest

project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.koszul_golod.algebra.graded import build_algebra  # noqa: E402
from src.koszul_golod.core.parsing import parse_presentation  # noqa: E402


def presentation_text(field: str, names: str, *relations: str) -> str:
    lines = [f"field: {field}", f"vars: {names}"] + [f"rel: {r}" for r in relations]
    return "\n".join(lines) + "\n"


@pytest.fixture
def algebra_of():
    """Build R = k[names]/(relations) up to internal degree J."""

    def build(field: str, names: str, *relations: str, truncation: int = 6):
        pres = parse_presentation(presentation_text(field, names, *relations))
        return build_algebra(pres, truncation)

    return build


@pytest.fixture
def presentation_file(tmp_path):
    """Write a presentation file and return its path as a string."""

    def write(field: str, names: str, *relations: str, name: str = "ring.txt") -> str:
        path = tmp_path / name
        path.write_text(presentation_text(field, names, *relations), encoding="utf-8")
        return str(path)

    return write
