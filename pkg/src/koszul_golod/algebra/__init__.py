"""Graded algebras R = Q/I, their ideals, socle and structural conditions."""
