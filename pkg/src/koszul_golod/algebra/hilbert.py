"""Exact Hilbert series of monomial quotients.

The numerator of HS(S/I) over (1-t)^n is computed by pivoting on a single
variable: N(I) = N(I + (x_k)) + t * N(I : x_k), with pairwise coprime
generators as the base case.
"""

import logging
from dataclasses import dataclass
from math import comb
from typing import List, Sequence, Tuple

import sympy as sp

from ..core.polynomial import Monomial, monomial_divides

logger = logging.getLogger(__name__)


def _poly_add(a: List[int], b: List[int]) -> List[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _poly_mul(a: List[int], b: List[int]) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def minimalize(gens: Sequence[Monomial]) -> List[Monomial]:
    """Minimal generators of a monomial ideal, in a fixed order."""
    out: List[Monomial] = []
    for m in sorted(set(gens), key=lambda x: (sum(x), x)):
        if all(not monomial_divides(g, m) for g in out):
            out.append(m)
    return out


def _pivot_variable(gens: Sequence[Monomial]) -> int:
    """Variable contained in the most generators; -1 when the generators are pairwise coprime."""
    n = len(gens[0])
    counts = [sum(1 for g in gens if g[k] > 0) for k in range(n)]
    best = max(range(n), key=lambda k: (counts[k], -k))
    return best if counts[best] >= 2 else -1


def hilbert_numerator(gens: Sequence[Monomial], nvars: int) -> List[int]:
    """Numerator N(t) with HS(S/I) = N(t) / (1-t)^nvars, as a coefficient list."""
    gens = minimalize(gens)
    if not gens:
        return [1]
    if any(sum(g) == 0 for g in gens):
        return []
    k = _pivot_variable(gens)
    if k < 0:
        out = [1]
        for g in gens:
            d = sum(g)
            out = _poly_mul(out, [1] + [0] * (d - 1) + [-1])
        return out
    x_k = tuple(1 if i == k else 0 for i in range(nvars))
    with_var = hilbert_numerator(list(gens) + [x_k], nvars)
    colon = [tuple(e - 1 if i == k and e > 0 else e for i, e in enumerate(g)) for g in gens]
    shifted = [0] + hilbert_numerator(colon, nvars)
    return _poly_add(with_var, shifted)


@dataclass(frozen=True)
class HilbertSeries:
    """HS(t) = numerator(t) / (1-t)^dimension with numerator(1) != 0."""

    numerator: Tuple[int, ...]
    dimension: int

    @property
    def is_polynomial(self) -> bool:
        return self.dimension == 0

    def coefficients(self, upto: int) -> List[int]:
        """h_0, ..., h_upto."""
        d = self.dimension
        out = []
        for i in range(upto + 1):
            if d == 0:
                out.append(self.numerator[i] if i < len(self.numerator) else 0)
                continue
            total = 0
            for j, c in enumerate(self.numerator):
                if j > i:
                    break
                total += c * comb(i - j + d - 1, d - 1)
            out.append(total)
        return out

    def matches(self, numerator: Sequence[int], dimension: int) -> bool:
        """Equality with numerator/(1-t)^dimension as rational functions."""
        lhs = _poly_mul(list(self.numerator), _one_minus_t_power(dimension))
        rhs = _poly_mul(_trim(list(numerator)), _one_minus_t_power(self.dimension))
        return lhs == rhs

    def as_expr(self, symbol: str = "t") -> sp.Expr:
        t = sp.Symbol(symbol)
        num = sum(c * t**i for i, c in enumerate(self.numerator))
        return num / (1 - t) ** self.dimension

    def format(self, symbol: str = "t") -> str:
        text = format_int_poly(self.numerator, symbol)
        if self.dimension == 0:
            return text
        den = f"(1 - {symbol})"
        if self.dimension > 1:
            den += f"^{self.dimension}"
        return f"({text})/{den}"


def _one_minus_t_power(d: int) -> List[int]:
    out = [1]
    for _ in range(d):
        out = _poly_mul(out, [1, -1])
    return out


def hilbert_series(leading: Sequence[Monomial], nvars: int) -> HilbertSeries:
    """Reduced Hilbert series of S/(leading) with S in ``nvars`` variables."""
    return hilbert_series_from_numerator(hilbert_numerator(leading, nvars), nvars)


def _divide_one_minus_t(num: List[int]) -> List[int]:
    """Exact division of an integer polynomial by (1 - t)."""
    out = []
    acc = 0
    for c in num[:-1]:
        acc += c
        out.append(acc)
    return _trim(out)


def complete_intersection_series(nvars: int, d: int) -> HilbertSeries:
    """Series (1-t^2)^d / (1-t)^nvars of a complete intersection of d quadrics."""
    num = [1]
    for _ in range(d):
        num = _poly_mul(num, [1, 0, -1])
    return hilbert_series_from_numerator(num, nvars)


def hilbert_series_from_numerator(num: Sequence[int], dim: int) -> HilbertSeries:
    work = _trim(list(num))
    while work and dim > 0 and sum(work) == 0:
        work = _divide_one_minus_t(work)
        dim -= 1
    return HilbertSeries(numerator=tuple(work), dimension=dim if work else 0)


def format_int_poly(coeffs: Sequence[int], symbol: str = "t") -> str:
    """Ascending rendering such as ``1 + 2*t - 2*t^3``."""
    pieces: List[str] = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            power = symbol if i == 1 else f"{symbol}^{i}"
            body = power if mag == 1 else f"{mag}*{power}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(pieces) if pieces else "0"
