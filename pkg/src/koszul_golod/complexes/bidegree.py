"""Bigraded complexes of free R-modules.

A complex is a list of homogeneous free generators per homological degree
together with the differential on generators, whose coefficients are
elements of R. The piece C_{i,j} is the k-vector space
  ⊕_{g in hom degree i} R_{j - weight(g)}
with coordinates laid out generator by generator in insertion order, so
appending generators never moves existing coordinates.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..algebra.graded import GradedAlgebra
from ..algebra.ideals import GradedIdealSlice
from ..core.polynomial import Monomial
from ..utils.errors import ComplexError, TruncationError
from ..utils.linalg import EchelonBasis, Vector

logger = logging.getLogger(__name__)

# (generator index, coefficient degree, first coordinate)
Block = Tuple[int, int, int]


@dataclass(frozen=True)
class Generator:
    label: str
    weight: int


class BidegreeComplex:
    """Free complex over a truncated GradedAlgebra, up to (hom_bound, internal_bound)."""

    def __init__(self, algebra: GradedAlgebra, hom_bound: int, internal_bound: int, name: str = "C"):
        if internal_bound > algebra.truncation:
            raise TruncationError(
                f"Complex {name} needs R up to degree {internal_bound}, algebra stops at {algebra.truncation}"
            )
        self.algebra = algebra
        self.hom_bound = hom_bound
        self.internal_bound = internal_bound
        self.name = name
        self.generators: Dict[int, List[Generator]] = {}
        # boundary[i][g] = {h: coefficient of generator h of C_{i-1}, in R_{w_g - w_h}}
        self.boundary: Dict[int, List[Dict[int, Vector]]] = {}
        self._layouts: Dict[Tuple[int, int], List[Block]] = {}
        self._diffs: Dict[Tuple[int, int], List[Vector]] = {}

    # -- construction -------------------------------------------------------

    def add_generator(self, hom: int, label: str, weight: int, boundary: Optional[Dict[int, Vector]] = None) -> int:
        gens = self.generators.setdefault(hom, [])
        gens.append(Generator(label, weight))
        self.boundary.setdefault(hom, []).append({h: c for h, c in (boundary or {}).items() if c})
        self._invalidate(hom)
        return len(gens) - 1

    def _invalidate(self, hom: int) -> None:
        for key in [k for k in self._layouts if k[0] == hom]:
            del self._layouts[key]
        for key in [k for k in self._diffs if k[0] in (hom, hom + 1)]:
            del self._diffs[key]

    def gens(self, i: int) -> List[Generator]:
        return self.generators.get(i, [])

    def rank(self, i: int) -> int:
        return len(self.gens(i))

    # -- coordinates --------------------------------------------------------

    def layout(self, i: int, j: int) -> List[Block]:
        key = (i, j)
        cached = self._layouts.get(key)
        if cached is not None:
            return cached
        alg = self.algebra
        blocks: List[Block] = []
        offset = 0
        for g, gen in enumerate(self.gens(i)):
            d = j - gen.weight
            if 0 <= d <= self.internal_bound:
                size = alg.dim(d)
                if size:
                    blocks.append((g, d, offset))
                    offset += size
        self._layouts[key] = blocks
        return blocks

    def dim(self, i: int, j: int) -> int:
        blocks = self.layout(i, j)
        if not blocks:
            return 0
        _, d, off = blocks[-1]
        return off + self.algebra.dim(d)

    def block_of(self, i: int, j: int) -> Dict[int, Tuple[int, int]]:
        return {g: (d, off) for g, d, off in self.layout(i, j)}

    def from_vector(self, i: int, j: int, vec: Vector) -> Dict[int, Vector]:
        out: Dict[int, Vector] = {}
        for g, d, off in self.layout(i, j):
            size = self.algebra.dim(d)
            part = {k - off: c for k, c in vec.items() if off <= k < off + size}
            if part:
                out[g] = part
        return out

    def multiply(self, vec: Vector, i: int, j: int, mono: Monomial) -> Vector:
        """mono * vec, moving from C_{i,j} to C_{i,j+|mono|}."""
        alg = self.algebra
        shift = sum(mono)
        element = self.from_vector(i, j, vec)
        target = self.block_of(i, j + shift)
        out: Vector = {}
        for g, coeff in element.items():
            d = j - self.gens(i)[g].weight
            prod = alg.times_monomial(mono, coeff, d)
            if prod:
                _, off = target[g]
                for k, c in prod.items():
                    out[off + k] = c
        return out

    # -- differential -------------------------------------------------------

    def differential(self, i: int, j: int) -> List[Vector]:
        """Columns of ∂ : C_{i,j} -> C_{i-1,j}, one per coordinate of C_{i,j}."""
        key = (i, j)
        cached = self._diffs.get(key)
        if cached is not None:
            return cached
        alg = self.algebra
        f = alg.field
        target = self.block_of(i - 1, j)
        columns: List[Vector] = []
        for g, d, _ in self.layout(i, j):
            w = self.gens(i)[g].weight
            terms = self.boundary[i][g]
            for b in range(alg.dim(d)):
                col: Vector = {}
                unit = {b: f.one}
                for h, coeff in terms.items():
                    if h not in target:
                        continue
                    delta = w - self.gens(i - 1)[h].weight
                    prod = alg.multiply(coeff, delta, unit, d)
                    _, off = target[h]
                    f.axpy(col, {off + k: c for k, c in prod.items()}, f.one)
                columns.append(col)
        self._diffs[key] = columns
        return columns

    def apply(self, i: int, j: int, vec: Vector) -> Vector:
        f = self.algebra.field
        cols = self.differential(i, j)
        out: Vector = {}
        for k, c in vec.items():
            f.axpy(out, cols[k], c)
        return out

    def bidegrees(self) -> List[Tuple[int, int]]:
        return [
            (i, j)
            for i in range(self.hom_bound + 1)
            for j in range(self.internal_bound + 1)
            if self.dim(i, j)
        ]

    # -- checks -------------------------------------------------------------

    def square_is_zero(self, i: int, j: int) -> bool:
        if i < 2:
            return True
        return all(not self.apply(i - 1, j, col) for col in self.differential(i, j))

    def verify_square_zero(self) -> None:
        """Raise ComplexError at the first bidegree where ∂∘∂ != 0."""
        for i in range(2, self.hom_bound + 1):
            for j in range(self.internal_bound + 1):
                if not self.square_is_zero(i, j):
                    logger.debug(self.dump(i, j))
                    raise ComplexError(f"∂∘∂ != 0 on {self.name} at bidegree ({i},{j})")
        logger.debug(f"{self.name}: ∂∘∂ = 0 up to ({self.hom_bound},{self.internal_bound})")

    # -- debug dump ---------------------------------------------------------

    def format_vector(self, i: int, j: int, vec: Vector) -> str:
        alg = self.algebra
        pieces = []
        for g, coeff in self.from_vector(i, j, vec).items():
            gen = self.gens(i)[g]
            text = alg.format_element(coeff, j - gen.weight)
            pieces.append(gen.label if text == "1" else f"({text})*{gen.label}")
        return " + ".join(pieces) or "0"

    def coordinate_labels(self, i: int, j: int) -> List[str]:
        alg = self.algebra
        labels = []
        for g, d, _ in self.layout(i, j):
            gen = self.gens(i)[g]
            for k in range(alg.dim(d)):
                coeff = alg.format_element({k: alg.field.one}, d)
                labels.append(gen.label if coeff == "1" else f"{coeff}*{gen.label}")
        return labels

    def dump(self, i: int, j: int) -> str:
        """Plain-text tableau of ∂ at (i, j): source labels, then one line per column."""
        f = self.algebra.field
        lines = [f"# {self.name} bidegree ({i},{j}) dim {self.dim(i, j)} -> dim {self.dim(i - 1, j)}"]
        targets = self.coordinate_labels(i - 1, j) if i > 0 else []
        for label, col in zip(self.coordinate_labels(i, j), self.differential(i, j) if i > 0 else []):
            image = " + ".join(f"{f.format(c)}*[{targets[k]}]" for k, c in sorted(col.items())) or "0"
            lines.append(f"{label} -> {image}")
        if i == 0:
            lines.extend(self.coordinate_labels(0, j))
        return "\n".join(lines)


# ============================================================================
# Ideal-scaled subcomplexes
# ============================================================================


class IdealSubcomplex:
    """The subcomplex a*C: degree pieces a_{j-w} * g inside C_{i,j}."""

    def __init__(self, complex_: BidegreeComplex, ideal: GradedIdealSlice):
        self.complex = complex_
        self.ideal = ideal
        self.label = f"{ideal.label or 'a'}{complex_.name}"
        self._bases: Dict[Tuple[int, int], List[Vector]] = {}

    def basis(self, i: int, j: int) -> List[Vector]:
        key = (i, j)
        cached = self._bases.get(key)
        if cached is not None:
            return cached
        out: List[Vector] = []
        for _, d, off in self.complex.layout(i, j):
            for v in self.ideal.basis(d):
                out.append({off + k: c for k, c in v.items()})
        self._bases[key] = out
        return out

    def dim(self, i: int, j: int) -> int:
        return len(self.basis(i, j))

    def is_subcomplex(self, i: int, j: int) -> bool:
        """∂(aC_{i,j}) lies in aC_{i-1,j}."""
        if i < 1:
            return True
        target = EchelonBasis(self.complex.algebra.field)
        for v in self.basis(i - 1, j):
            target.add(v)
        return all(target.contains(self.complex.apply(i, j, v)) for v in self.basis(i, j))


def scale_by_ideal(complex_: BidegreeComplex, ideal: GradedIdealSlice) -> IdealSubcomplex:
    """a*C for an ideal slice a of R."""
    top = complex_.internal_bound - min(
        (g.weight for gens in complex_.generators.values() for g in gens), default=0
    )
    if ideal.top < min(top, complex_.algebra.truncation):
        raise TruncationError(
            f"Ideal {ideal.label} known to degree {ideal.top}; {complex_.name} needs degree {top}"
        )
    return IdealSubcomplex(complex_, ideal)

