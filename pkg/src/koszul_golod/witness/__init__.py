"""Golod witnesses P = Q/(f) -> R: verification and search."""
