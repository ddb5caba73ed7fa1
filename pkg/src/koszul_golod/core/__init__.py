"""Fields, polynomials, Gröbner bases and parsing."""
