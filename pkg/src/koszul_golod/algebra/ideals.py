"""Homogeneous ideals of R as per-degree subspaces up to a top degree."""

import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..utils.errors import TruncationError
from ..utils.linalg import EchelonBasis, Vector, intersection, kernel
from .graded import GradedAlgebra, LinearForm

logger = logging.getLogger(__name__)

Generator = Tuple[Vector, int]


class GradedIdealSlice:
    """Degree pieces I_0, ..., I_top of a homogeneous ideal of R.

    Every piece is an echelon basis in the standard-monomial coordinates of
    R_d. Asking for a degree above ``top`` raises TruncationError.
    """

    def __init__(self, algebra: GradedAlgebra, top: int, label: str = ""):
        self.algebra = algebra
        self.top = min(top, algebra.truncation)
        self.label = label
        self.pieces: Dict[int, EchelonBasis] = {
            d: EchelonBasis(algebra.field) for d in range(self.top + 1)
        }

    # -- builders -----------------------------------------------------------

    @classmethod
    def from_generators(
        cls,
        algebra: GradedAlgebra,
        gens: Iterable[Generator],
        top: Optional[int] = None,
        label: str = "",
    ) -> "GradedIdealSlice":
        """Ideal generated by homogeneous elements (vector, degree)."""
        top = algebra.truncation if top is None else top
        slice_ = cls(algebra, top, label)
        by_degree: Dict[int, List[Vector]] = {}
        for vec, d in gens:
            if vec and d <= slice_.top:
                by_degree.setdefault(d, []).append(vec)
        for d in range(slice_.top + 1):
            piece = slice_.pieces[d]
            if d > 0:
                for v in slice_.pieces[d - 1].basis():
                    for k in range(algebra.nvars):
                        piece.add(algebra.times_variable(k, v, d - 1))
            for v in by_degree.get(d, []):
                piece.add(v)
        return slice_

    @classmethod
    def power(cls, algebra: GradedAlgebra, n: int, top: Optional[int] = None) -> "GradedIdealSlice":
        """The ideal m^n (m^0 = R)."""
        top = algebra.truncation if top is None else top
        slice_ = cls(algebra, top, "m" if n == 1 else f"m^{n}")
        f = algebra.field
        for d in range(max(n, 0), slice_.top + 1):
            for i in range(algebra.dim(d)):
                slice_.pieces[d].add({i: f.one})
        return slice_

    @classmethod
    def zero(cls, algebra: GradedAlgebra, top: Optional[int] = None) -> "GradedIdealSlice":
        return cls(algebra, algebra.truncation if top is None else top, "0")

    @classmethod
    def principal(
        cls, algebra: GradedAlgebra, form: LinearForm, top: Optional[int] = None, label: str = ""
    ) -> "GradedIdealSlice":
        return cls.from_generators(algebra, [(algebra.linear_element(form), 1)], top, label)

    @classmethod
    def from_linear_forms(
        cls,
        algebra: GradedAlgebra,
        forms: Sequence[LinearForm],
        top: Optional[int] = None,
        label: str = "",
    ) -> "GradedIdealSlice":
        return cls.from_generators(algebra, [(algebra.linear_element(x), 1) for x in forms], top, label)

    # -- queries ------------------------------------------------------------

    def _check(self, d: int) -> None:
        if d > self.top:
            raise TruncationError(
                f"Ideal {self.label or '<slice>'} is only known up to degree {self.top}, asked for {d}"
            )

    def dim(self, d: int) -> int:
        if d < 0:
            return 0
        self._check(d)
        return self.pieces[d].rank

    def dims(self) -> List[int]:
        return [self.pieces[d].rank for d in range(self.top + 1)]

    def basis(self, d: int) -> List[Vector]:
        self._check(d)
        return self.pieces[d].basis()

    def contains_vector(self, vec: Vector, d: int) -> bool:
        if not vec:
            return True
        self._check(d)
        return self.pieces[d].contains(vec)

    def is_zero(self) -> bool:
        return all(p.rank == 0 for p in self.pieces.values())

    def truncated(self, top: int) -> "GradedIdealSlice":
        out = GradedIdealSlice(self.algebra, min(top, self.top), self.label)
        for d in range(out.top + 1):
            for v in self.basis(d):
                out.pieces[d].add(v)
        return out

    def minimal_generators(self) -> List[Generator]:
        """Homogeneous elements generating the slice up to its top degree."""
        alg = self.algebra
        out: List[Generator] = []
        for d in range(self.top + 1):
            lower = EchelonBasis(alg.field)
            if d > 0:
                for v in self.pieces[d - 1].basis():
                    for k in range(alg.nvars):
                        lower.add(alg.times_variable(k, v, d - 1))
            for v in self.pieces[d].basis():
                if lower.add(v):
                    out.append((v, d))
        return out

    def is_closed(self) -> bool:
        """R_1 * I_d is inside I_{d+1} for every stored d."""
        alg = self.algebra
        for d in range(self.top):
            for v in self.pieces[d].basis():
                for k in range(alg.nvars):
                    if not self.pieces[d + 1].contains(alg.times_variable(k, v, d)):
                        return False
        return True

    def __repr__(self) -> str:
        return f"<GradedIdealSlice {self.label or '?'} dims={self.dims()}>"


# ============================================================================
# Ideal arithmetic
# ============================================================================


def ideal_sum(a: GradedIdealSlice, b: GradedIdealSlice) -> GradedIdealSlice:
    out = GradedIdealSlice(a.algebra, min(a.top, b.top), f"({a.label}+{b.label})")
    for d in range(out.top + 1):
        for v in a.basis(d) + b.basis(d):
            out.pieces[d].add(v)
    return out


def ideal_product(a: GradedIdealSlice, b: GradedIdealSlice) -> GradedIdealSlice:
    alg = a.algebra
    top = min(a.top, b.top)
    gens = []
    for u, du in a.minimal_generators():
        for v, dv in b.minimal_generators():
            if du + dv <= top:
                gens.append((alg.multiply(u, du, v, dv), du + dv))
    return GradedIdealSlice.from_generators(alg, gens, top, f"{a.label}{b.label}")


def ideal_intersection(a: GradedIdealSlice, b: GradedIdealSlice) -> GradedIdealSlice:
    out = GradedIdealSlice(a.algebra, min(a.top, b.top), f"({a.label}∩{b.label})")
    f = a.algebra.field
    for d in range(out.top + 1):
        for v in intersection(f, a.basis(d), b.basis(d)):
            out.pieces[d].add(v)
    return out


def _image_kernel(
    algebra: GradedAlgebra,
    d: int,
    gens: Sequence[Generator],
    modulo: Optional[GradedIdealSlice] = None,
) -> List[Vector]:
    """Elements r of R_d with r*g = 0 (or in ``modulo``) for every generator g."""
    f = algebra.field
    images: List[Vector] = []
    for i in range(algebra.dim(d)):
        r = {i: f.one}
        combined: Vector = {}
        offset = 0
        for g, dg in gens:
            prod = algebra.multiply(r, d, g, dg)
            if modulo is not None:
                prod = modulo.pieces[d + dg].reduce(prod)
            for k, c in prod.items():
                combined[offset + k] = c
            offset += algebra.dim(d + dg)
        images.append(combined)
    return kernel(f, images)


def annihilator(a: GradedIdealSlice, top: Optional[int] = None) -> GradedIdealSlice:
    """ann(a), exact up to J minus the largest generator degree."""
    alg = a.algebra
    gens = a.minimal_generators()
    max_gen = max((d for _, d in gens), default=0)
    limit = alg.truncation - max_gen
    top = limit if top is None else min(top, limit)
    out = GradedIdealSlice(alg, top, f"ann({a.label})")
    for d in range(out.top + 1):
        if not gens:
            for i in range(alg.dim(d)):
                out.pieces[d].add({i: alg.field.one})
            continue
        for v in _image_kernel(alg, d, gens):
            out.pieces[d].add(v)
    return out


def annihilator_of_form(
    algebra: GradedAlgebra, form: LinearForm, top: Optional[int] = None
) -> GradedIdealSlice:
    return annihilator(GradedIdealSlice.principal(algebra, form, label="x"), top)


def colon(a: GradedIdealSlice, b: GradedIdealSlice) -> GradedIdealSlice:
    """(a : b) = {r : r b ⊆ a}."""
    alg = a.algebra
    gens = b.minimal_generators()
    max_gen = max((d for _, d in gens), default=0)
    out = GradedIdealSlice(alg, min(a.top - max_gen, b.top), f"({a.label}:{b.label})")
    for d in range(out.top + 1):
        if not gens:
            for i in range(alg.dim(d)):
                out.pieces[d].add({i: alg.field.one})
            continue
        for v in _image_kernel(alg, d, gens, modulo=a):
            out.pieces[d].add(v)
    return out


def contains(a: GradedIdealSlice, b: GradedIdealSlice, depth: Optional[int] = None) -> bool:
    """b ⊆ a in every degree up to min(tops, depth)."""
    top = min(a.top, b.top) if depth is None else min(a.top, b.top, depth)
    for d in range(top + 1):
        piece = a.pieces[d]
        if any(not piece.contains(v) for v in b.basis(d)):
            return False
    return True


def equals(a: GradedIdealSlice, b: GradedIdealSlice, depth: Optional[int] = None) -> bool:
    top = min(a.top, b.top) if depth is None else min(a.top, b.top, depth)
    return all(a.dim(d) == b.dim(d) for d in range(top + 1)) and contains(a, b, depth)
