"""Bigraded complexes: Koszul complex, short Tate complexes and the ν maps."""
