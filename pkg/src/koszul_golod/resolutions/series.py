"""Truncated power series in z (homological) and t (internal degree).

Coefficients are Python integers: every series handled here is a
Poincaré or Hilbert series, or a quotient of such series by one with
constant term 1.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..algebra.hilbert import HilbertSeries

Bidegree = Tuple[int, int]


@dataclass(frozen=True)
class TruncatedSeries:
    """sum c[i][j] z^i t^j for i <= zdeg and j <= tdeg."""

    coeffs: Tuple[Tuple[int, ...], ...]

    # -- builders -----------------------------------------------------------

    @classmethod
    def zero(cls, zdeg: int, tdeg: int) -> "TruncatedSeries":
        return cls(tuple(tuple(0 for _ in range(tdeg + 1)) for _ in range(zdeg + 1)))

    @classmethod
    def from_dict(cls, terms: Dict[Bidegree, int], zdeg: int, tdeg: int) -> "TruncatedSeries":
        rows = [[0] * (tdeg + 1) for _ in range(zdeg + 1)]
        for (i, j), c in terms.items():
            if 0 <= i <= zdeg and 0 <= j <= tdeg:
                rows[i][j] += c
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def one(cls, zdeg: int, tdeg: int) -> "TruncatedSeries":
        return cls.from_dict({(0, 0): 1}, zdeg, tdeg)

    @classmethod
    def diagonal(cls, values: Sequence[int], zdeg: int, tdeg: int, shift: int = 0) -> "TruncatedSeries":
        """sum values[i] z^i t^(i + shift*[i > 0])."""
        terms = {}
        for i, c in enumerate(values):
            terms[(i, i + (shift if i > 0 else 0))] = c
        return cls.from_dict(terms, zdeg, tdeg)

    @classmethod
    def in_zt(cls, values: Sequence[int], zdeg: int, tdeg: int) -> "TruncatedSeries":
        """sum values[i] (zt)^i."""
        return cls.diagonal(values, zdeg, tdeg)

    # -- shape --------------------------------------------------------------

    @property
    def zdeg(self) -> int:
        return len(self.coeffs) - 1

    @property
    def tdeg(self) -> int:
        return len(self.coeffs[0]) - 1 if self.coeffs else -1

    def coefficient(self, i: int, j: int) -> int:
        if 0 <= i <= self.zdeg and 0 <= j <= self.tdeg:
            return self.coeffs[i][j]
        return 0

    def terms(self) -> Dict[Bidegree, int]:
        return {
            (i, j): c for i, row in enumerate(self.coeffs) for j, c in enumerate(row) if c
        }

    def _like(self, rows: List[List[int]]) -> "TruncatedSeries":
        return TruncatedSeries(tuple(tuple(r) for r in rows))

    def truncate(self, zdeg: int, tdeg: int) -> "TruncatedSeries":
        return TruncatedSeries.from_dict(self.terms(), zdeg, tdeg)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "TruncatedSeries") -> None:
        if (self.zdeg, self.tdeg) != (other.zdeg, other.tdeg):
            raise ValueError(
                f"Series bounds differ: ({self.zdeg},{self.tdeg}) vs ({other.zdeg},{other.tdeg})"
            )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return self._like([[a + b for a, b in zip(r, s)] for r, s in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "TruncatedSeries":
        return self._like([[-a for a in r] for r in self.coeffs])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        Z, T = self.zdeg, self.tdeg
        rows = [[0] * (T + 1) for _ in range(Z + 1)]
        left = self.terms()
        right = other.terms()
        for (i, j), a in left.items():
            for (k, l), b in right.items():
                if i + k <= Z and j + l <= T:
                    rows[i + k][j + l] += a * b
        return self._like(rows)

    def shift(self, di: int, dj: int) -> "TruncatedSeries":
        """Multiply by z^di t^dj."""
        return TruncatedSeries.from_dict(
            {(i + di, j + dj): c for (i, j), c in self.terms().items()}, self.zdeg, self.tdeg
        )

    def __pow__(self, n: int) -> "TruncatedSeries":
        out = TruncatedSeries.one(self.zdeg, self.tdeg)
        for _ in range(n):
            out = out * self
        return out

    def inverse(self) -> "TruncatedSeries":
        """1/self; the constant term must be +1 or -1."""
        c0 = self.coefficient(0, 0)
        if c0 not in (1, -1):
            raise ValueError(f"Constant term {c0} is not a unit over the integers")
        Z, T = self.zdeg, self.tdeg
        rows = [[0] * (T + 1) for _ in range(Z + 1)]
        terms = [(b, c) for b, c in self.terms().items() if b != (0, 0)]
        # the bidegrees (i, j) are processed with i + j increasing
        for total in range(Z + T + 1):
            for i in range(max(0, total - T), min(Z, total) + 1):
                j = total - i
                acc = 1 if (i, j) == (0, 0) else 0
                for (k, l), c in terms:
                    if k <= i and l <= j:
                        acc -= c * rows[i - k][j - l]
                rows[i][j] = acc * c0
        return self._like(rows)

    # -- comparisons --------------------------------------------------------

    def first_difference(self, other: "TruncatedSeries") -> Optional[Bidegree]:
        """Smallest (i, j) in lexicographic order where the coefficients differ."""
        self._check(other)
        for i in range(self.zdeg + 1):
            for j in range(self.tdeg + 1):
                if self.coeffs[i][j] != other.coeffs[i][j]:
                    return (i, j)
        return None

    def dominated_by(self, other: "TruncatedSeries") -> Optional[Bidegree]:
        """None when self <= other coefficientwise, else the first violation."""
        self._check(other)
        for i in range(self.zdeg + 1):
            for j in range(self.tdeg + 1):
                if self.coeffs[i][j] > other.coeffs[i][j]:
                    return (i, j)
        return None

    def format(self, zname: str = "z", tname: str = "t") -> str:
        pieces = []
        for (i, j), c in sorted(self.terms().items()):
            parts = []
            if i:
                parts.append(zname if i == 1 else f"{zname}^{i}")
            if j:
                parts.append(tname if j == 1 else f"{tname}^{j}")
            mono = "*".join(parts)
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces) or "0"


# ============================================================================
# Univariate helpers
# ============================================================================


def power_series_inverse(coeffs: Sequence[int], depth: int) -> List[int]:
    """Coefficients of 1/p(z) up to z^depth for an integer series with p(0) = 1."""
    if not coeffs or coeffs[0] != 1:
        raise ValueError("Series must have constant term 1")
    out = [0] * (depth + 1)
    out[0] = 1
    for n in range(1, depth + 1):
        acc = 0
        for k in range(1, min(n, len(coeffs) - 1) + 1):
            acc -= coeffs[k] * out[n - k]
        out[n] = acc
    return out


def _poly_mul(a: Sequence[int], b: Sequence[int], depth: int) -> List[int]:
    out = [0] * (depth + 1)
    for i, x in enumerate(a):
        if i > depth:
            break
        for j, y in enumerate(b):
            if i + j > depth:
                break
            out[i + j] += x * y
    return out


def reciprocal_hilbert(series: HilbertSeries, depth: int) -> List[int]:
    """Coefficients of 1/H(-z) up to z^depth: (1+z)^dim / numerator(-z)."""
    num = [c * (-1) ** i for i, c in enumerate(series.numerator)]
    binom = [1]
    for _ in range(series.dimension):
        binom = _poly_mul(binom, [1, 1], depth)
    return _poly_mul(binom, power_series_inverse(num, depth), depth)


def hilbert_in_zt(series: HilbertSeries, zdeg: int, tdeg: int, sign: int = -1) -> TruncatedSeries:
    """H(sign * zt) as a bivariate series."""
    h = series.coefficients(min(zdeg, tdeg))
    return TruncatedSeries.in_zt([c * sign**i for i, c in enumerate(h)], zdeg, tdeg)


def first_negative(values: Iterable[int]) -> Optional[int]:
    for i, c in enumerate(values):
        if c < 0:
            return i
    return None


def complete_intersection_poincare(e: int, d: int, zdeg: int, tdeg: int) -> TruncatedSeries:
    """(1 + zt)^e / (1 - z^2 t^2)^d, the Poincaré series of k over a CI of d quadrics."""
    one = TruncatedSeries.one(zdeg, tdeg)
    zt = one.shift(1, 1)
    num = (one + zt) ** e
    den = (one - zt.shift(1, 1)) ** d
    return num * den.inverse()


def serre_bound(p_k: TruncatedSeries, p_r: TruncatedSeries) -> TruncatedSeries:
    """P^P_k / (1 - z (P^P_R - 1)), the coefficientwise upper bound for P^R_k."""
    one = TruncatedSeries.one(p_k.zdeg, p_k.tdeg)
    denominator = one - (p_r - one).shift(1, 0)
    return p_k * denominator.inverse()
