"""Sparse multivariate polynomials over the engine's fields, and term orders."""

import logging
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from ..models.enums import TermOrderKind
from .field import Field

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]

# Degree of the zero polynomial.
NEG_INF = float("-inf")


# ============================================================================
# Monomial helpers
# ============================================================================


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True when a divides b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Optional[Monomial]:
    """a / b, or None when b does not divide a."""
    out = tuple(x - y for x, y in zip(a, b))
    if any(x < 0 for x in out):
        return None
    return out


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def unit_monomial(nvars: int, i: int) -> Monomial:
    return tuple(1 if k == i else 0 for k in range(nvars))


def monomials_of_degree(nvars: int, d: int) -> List[Monomial]:
    """All exponent vectors of total degree d, in a fixed (lex) order."""
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        m = [0] * nvars
        for i in combo:
            m[i] += 1
        out.append(tuple(m))
    return out


def format_monomial(m: Monomial, names: Sequence[str]) -> str:
    parts = []
    for name, exp in zip(names, m):
        if exp == 1:
            parts.append(name)
        elif exp > 1:
            parts.append(f"{name}^{exp}")
    return "*".join(parts) if parts else "1"


# ============================================================================
# Term orders
# ============================================================================


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order given by a sort key; larger key means larger monomial.

    ``perm`` lists the variables from largest to smallest, so ``perm[0]`` is
    the leading variable under lex. ``weights`` is only used by weighted-lex.
    """

    kind: str
    perm: Tuple[int, ...]
    weights: Optional[Tuple[int, ...]] = None

    def __post_init__(self) -> None:
        if self.kind not in {k.value for k in TermOrderKind}:
            raise ValueError(f"Unknown term order {self.kind!r}")
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"Variable order {self.perm} is not a permutation")
        if self.kind == "weighted-lex":
            if self.weights is None or len(self.weights) != len(self.perm):
                raise ValueError("weighted-lex needs one positive weight per variable")
            if any(w <= 0 for w in self.weights):
                raise ValueError("weighted-lex weights must be positive")

    @classmethod
    def grevlex(cls, nvars: int) -> "MonomialOrder":
        return cls(TermOrderKind.GREVLEX.value, tuple(range(nvars)))

    @classmethod
    def lex(cls, nvars: int) -> "MonomialOrder":
        return cls(TermOrderKind.LEX.value, tuple(range(nvars)))

    @property
    def nvars(self) -> int:
        return len(self.perm)

    def key(self, m: Monomial) -> tuple:
        perm = self.perm
        if self.kind == "lex":
            return tuple(m[i] for i in perm)
        if self.kind == "grevlex":
            return (sum(m),) + tuple(-m[i] for i in reversed(perm))
        weights = self.weights or ()
        return (sum(w * x for w, x in zip(weights, m)),) + tuple(m[i] for i in perm)

    def describe(self, names: Optional[Sequence[str]] = None) -> str:
        labels = [names[i] if names else f"x{i + 1}" for i in self.perm]
        return f"{self.kind}({'>'.join(labels)})"


# ============================================================================
# Polynomials
# ============================================================================


class Polynomial:
    """Immutable sparse polynomial: exponent tuple -> nonzero coefficient."""

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: Field, nvars: int, terms: Optional[Dict[Monomial, Any]] = None):
        self.field = field
        self.nvars = nvars
        clean: Dict[Monomial, Any] = {}
        for m, c in (terms or {}).items():
            if len(m) != nvars:
                raise ValueError(f"Monomial {m} does not have {nvars} exponents")
            if not field.is_zero(c):
                clean[m] = c
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, field: Field, nvars: int) -> "Polynomial":
        return cls(field, nvars)

    @classmethod
    def constant(cls, field: Field, nvars: int, c: Any) -> "Polynomial":
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, field: Field, nvars: int, i: int) -> "Polynomial":
        return cls(field, nvars, {unit_monomial(nvars, i): field.one})

    @classmethod
    def monomial(cls, field: Field, m: Monomial, c: Any = None) -> "Polynomial":
        return cls(field, len(m), {m: field.one if c is None else c})

    @classmethod
    def linear(cls, field: Field, coeffs: Sequence[Any]) -> "Polynomial":
        n = len(coeffs)
        return cls(field, n, {unit_monomial(n, i): c for i, c in enumerate(coeffs)})

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, Any]]:
        return iter(self.terms.items())

    @property
    def degree(self) -> Union[int, float]:
        if not self.terms:
            return NEG_INF
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def coefficient(self, m: Monomial) -> Any:
        return self.terms.get(m, self.field.zero)

    def _check(self, other: "Polynomial") -> None:
        if other.field is not self.field or other.nvars != self.nvars:
            raise ValueError("Polynomials live in different rings")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        f = self.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            nv = f.add(out.get(m, f.zero), c)
            if f.is_zero(nv):
                out.pop(m, None)
            else:
                out[m] = nv
        return Polynomial(f, self.nvars, out)

    def __neg__(self) -> "Polynomial":
        f = self.field
        return Polynomial(f, self.nvars, {m: f.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, c: Any) -> "Polynomial":
        f = self.field
        if f.is_zero(c):
            return Polynomial(f, self.nvars)
        return Polynomial(f, self.nvars, {m: f.mul(c, v) for m, v in self.terms.items()})

    def mul_monomial(self, mono: Monomial, c: Any = None) -> "Polynomial":
        f = self.field
        c = f.one if c is None else c
        return Polynomial(
            f, self.nvars, {monomial_mul(m, mono): f.mul(c, v) for m, v in self.terms.items()}
        )

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        f = self.field
        out: Dict[Monomial, Any] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                nv = f.add(out.get(m, f.zero), f.mul(c1, c2))
                if f.is_zero(nv):
                    out.pop(m, None)
                else:
                    out[m] = nv
        return Polynomial(f, self.nvars, out)

    def __pow__(self, n: int) -> "Polynomial":
        result = Polynomial.constant(self.field, self.nvars, self.field.one)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (
            self.field is other.field and self.nvars == other.nvars and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- order-dependent queries -------------------------------------------

    def sorted_terms(self, order: MonomialOrder) -> List[Tuple[Monomial, Any]]:
        """Terms from the largest monomial down."""
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        if not self.terms:
            raise ValueError("The zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder) -> Any:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.field.inv(self.leading_coefficient(order)))

    # -- substitution -------------------------------------------------------

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Replace x_i by images[i]; all images must share a ring."""
        if len(images) != self.nvars:
            raise ValueError(f"Need {self.nvars} images, got {len(images)}")
        target = images[0] if images else self
        f = self.field
        out = Polynomial(f, target.nvars)
        powers: Dict[Tuple[int, int], Polynomial] = {}
        for m, c in self.terms.items():
            term = Polynomial.constant(f, target.nvars, c)
            for i, exp in enumerate(m):
                if exp == 0:
                    continue
                key = (i, exp)
                if key not in powers:
                    powers[key] = images[i] ** exp
                term = term * powers[key]
            out = out + term
        return out

    def linear_change(self, matrix: Sequence[Sequence[Any]]) -> "Polynomial":
        """Substitute x_i -> sum_j matrix[i][j] x_j."""
        images = [Polynomial.linear(self.field, row) for row in matrix]
        return self.substitute(images)

    def map_coefficients(self, fn: Callable[[Any], Any], field: Optional[Field] = None) -> "Polynomial":
        target = field or self.field
        return Polynomial(target, self.nvars, {m: fn(c) for m, c in self.terms.items()})

    # -- rendering ----------------------------------------------------------

    def format(self, names: Sequence[str], order: Optional[MonomialOrder] = None) -> str:
        if not self.terms:
            return "0"
        order = order or MonomialOrder.grevlex(self.nvars)
        f = self.field
        pieces: List[str] = []
        for m, c in self.sorted_terms(order):
            text = f.format(c)
            negative = text.startswith("-")
            if negative:
                text = text[1:]
            if "+" in text or "-" in text:
                text = f"({text})"
            mono = format_monomial(m, names)
            if mono == "1":
                body = text
            elif text == "1":
                body = mono
            else:
                body = f"{text}*{mono}"
            if not pieces:
                pieces.append(("-" if negative else "") + body)
            else:
                pieces.append((" - " if negative else " + ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        names = [f"x{i + 1}" for i in range(self.nvars)]
        return f"Polynomial({self.format(names)!r} over {self.field.name})"


def coefficient_vector(p: Polynomial, index: Dict[Monomial, int]) -> Dict[int, Any]:
    """Sparse coordinate vector of p in the monomial basis ``index``."""
    return {index[m]: c for m, c in p.terms.items()}


def quadric_space(
    polys: Iterable[Polynomial], nvars: int
) -> Tuple[List[Monomial], List[Dict[int, Any]]]:
    """Coordinates of quadrics in the monomial basis of Q_2."""
    monos = monomials_of_degree(nvars, 2)
    index = {m: i for i, m in enumerate(monos)}
    return monos, [coefficient_vector(p, index) for p in polys]
