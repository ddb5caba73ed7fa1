"""Exact sparse linear algebra over the engine's fields.

Vectors are ``dict[int, coeff]`` with no zero entries. An ``EchelonBasis``
keeps rows whose pivot is their smallest key, normalized to 1; rows are
not back-reduced, so reduction walks pivots in increasing order.
"""

import heapq
import logging
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from ..core.field import Field
from .errors import SingularMatrixError

logger = logging.getLogger(__name__)

Vector = Dict[int, Any]


class EchelonBasis:
    """Incrementally built semi-echelon basis, optionally tracking combinations.

    With ``tracked=True`` every stored row remembers which combination of the
    inserted vectors produced it; ``insert`` then reports dependencies and
    ``express`` writes a vector in terms of the inserted ones.
    """

    def __init__(self, field: Field, tracked: bool = False):
        self.field = field
        self.tracked = tracked
        self.rows: Dict[int, Vector] = {}
        self.tags: Dict[int, Vector] = {}
        self._count = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def basis(self) -> List[Vector]:
        return [dict(self.rows[k]) for k in sorted(self.rows)]

    def pivots(self) -> List[int]:
        return sorted(self.rows)

    def _reduce(self, vec: Vector, tag: Optional[Vector]) -> Tuple[Vector, Optional[Vector]]:
        f = self.field
        rows = self.rows
        v = dict(vec)
        t = dict(tag) if tag is not None else None
        heap = [k for k in v if k in rows]
        heapq.heapify(heap)
        while heap:
            k = heapq.heappop(heap)
            c = v.get(k)
            if c is None:
                continue
            row = rows[k]
            for kk in row:
                if kk != k and kk not in v and kk in rows:
                    heapq.heappush(heap, kk)
            neg = f.neg(c)
            f.axpy(v, row, neg)
            if t is not None:
                f.axpy(t, self.tags[k], neg)
        return v, t

    def reduce(self, vec: Vector) -> Vector:
        """Remainder of ``vec`` modulo the span."""
        return self._reduce(vec, None)[0]

    def contains(self, vec: Vector) -> bool:
        return not self.reduce(vec)

    def insert(self, vec: Vector, tag: Optional[Vector] = None) -> Optional[Vector]:
        """Insert a vector.

        Untracked bases return ``{}`` when the vector was new and None when it
        was already in the span. Tracked bases return None when the vector was
        new and the dependency (a combination of inserted vectors summing to
        zero) when it was not.
        """
        if self.tracked and tag is None:
            tag = {self._count: self.field.one}
        self._count += 1
        v, t = self._reduce(vec, tag if self.tracked else None)
        if not v:
            return t if self.tracked else None
        f = self.field
        pivot = min(v)
        scale = f.inv(v[pivot])
        self.rows[pivot] = f.scale(v, scale)
        if self.tracked:
            self.tags[pivot] = f.scale(t or {}, scale)
            return None
        return {}

    def add(self, vec: Vector) -> bool:
        """Insert an untracked vector; True when the rank grew."""
        if self.tracked:
            return self.insert(vec) is None
        return self.insert(vec) is not None

    def express(self, vec: Vector) -> Optional[Vector]:
        """Coefficients writing ``vec`` as a combination of inserted vectors."""
        if not self.tracked:
            raise ValueError("express() needs a tracked basis")
        v, t = self._reduce(vec, {})
        if v:
            return None
        f = self.field
        return {k: f.neg(c) for k, c in (t or {}).items()}


def rank(field: Field, vectors: Iterable[Vector]) -> int:
    basis = EchelonBasis(field)
    for v in vectors:
        basis.add(v)
    return basis.rank


def kernel(field: Field, images: Sequence[Vector]) -> List[Vector]:
    """Basis of {c : sum_j c_j images[j] = 0}, as vectors indexed by j."""
    basis = EchelonBasis(field, tracked=True)
    result = []
    for j, image in enumerate(images):
        dep = basis.insert(image, {j: field.one})
        if dep is not None:
            result.append(dep)
    return result


def solve(field: Field, columns: Sequence[Vector], target: Vector) -> Optional[Vector]:
    """Some c with sum_j c_j columns[j] = target, or None."""
    basis = EchelonBasis(field, tracked=True)
    for j, col in enumerate(columns):
        basis.insert(col, {j: field.one})
    return basis.express(target)


def combine(field: Field, vectors: Sequence[Vector], coeffs: Vector) -> Vector:
    out: Vector = {}
    for j, c in coeffs.items():
        field.axpy(out, vectors[j], c)
    return out


def intersection(field: Field, first: Sequence[Vector], second: Sequence[Vector]) -> List[Vector]:
    """Basis of span(first) ∩ span(second)."""
    m = len(first)
    deps = kernel(field, list(first) + list(second))
    out = EchelonBasis(field)
    for dep in deps:
        left = {j: c for j, c in dep.items() if j < m}
        out.add(combine(field, first, left))
    return out.basis()


def to_sparse(field: Field, values: Sequence[Any]) -> Vector:
    return {i: v for i, v in enumerate(values) if not field.is_zero(v)}


def mat_vec(field: Field, matrix: Sequence[Sequence[Any]], vec: Sequence[Any]) -> List[Any]:
    out = []
    for row in matrix:
        acc = field.zero
        for a, b in zip(row, vec):
            if not field.is_zero(a) and not field.is_zero(b):
                acc = field.add(acc, field.mul(a, b))
        out.append(acc)
    return out


def identity(field: Field, n: int) -> List[List[Any]]:
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def inverse(field: Field, matrix: Sequence[Sequence[Any]]) -> List[List[Any]]:
    """Gauss-Jordan inverse of a square dense matrix."""
    n = len(matrix)
    work = [list(row) + ident for row, ident in zip(matrix, identity(field, n))]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not field.is_zero(work[r][col])), None)
        if pivot is None:
            raise SingularMatrixError(f"Matrix is singular (no pivot in column {col})")
        work[col], work[pivot] = work[pivot], work[col]
        inv = field.inv(work[col][col])
        work[col] = [field.mul(inv, x) for x in work[col]]
        for r in range(n):
            if r == col or field.is_zero(work[r][col]):
                continue
            c = field.neg(work[r][col])
            work[r] = [field.add(x, field.mul(c, y)) for x, y in zip(work[r], work[col])]
    return [row[n:] for row in work]


def is_invertible(field: Field, matrix: Sequence[Sequence[Any]]) -> bool:
    return rank(field, [to_sparse(field, row) for row in matrix]) == len(matrix)
