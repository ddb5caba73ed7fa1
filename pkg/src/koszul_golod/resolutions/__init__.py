"""Minimal resolutions, series arithmetic, Koszul and Golod-ring tests."""
