"""Homology of bigraded complexes and the ν maps H(a'C) -> H(aC)."""

import logging
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Tuple, Union

from ..algebra.ideals import GradedIdealSlice
from ..utils.linalg import EchelonBasis, Vector, combine, kernel
from .bidegree import BidegreeComplex, IdealSubcomplex, scale_by_ideal

logger = logging.getLogger(__name__)

Bidegree = Tuple[int, int]
Chains = Union[BidegreeComplex, IdealSubcomplex]


def _ambient(chains: Chains) -> BidegreeComplex:
    return chains.complex if isinstance(chains, IdealSubcomplex) else chains


def _basis(chains: Chains, i: int, j: int) -> List[Vector]:
    if isinstance(chains, IdealSubcomplex):
        return chains.basis(i, j)
    f = chains.algebra.field
    return [{k: f.one} for k in range(chains.dim(i, j))]


def cycles(chains: Chains, i: int, j: int) -> List[Vector]:
    """Basis of the cycles of chains_{i,j}, in ambient coordinates."""
    C = _ambient(chains)
    f = C.algebra.field
    basis = _basis(chains, i, j)
    if not basis:
        return []
    if i == 0:
        return basis
    images = [C.apply(i, j, v) for v in basis]
    return [combine(f, basis, dep) for dep in kernel(f, images)]


def boundaries(chains: Chains, i: int, j: int) -> List[Vector]:
    C = _ambient(chains)
    out = EchelonBasis(C.algebra.field)
    for v in _basis(chains, i + 1, j):
        out.add(C.apply(i + 1, j, v))
    return out.basis()


def homology_dim(chains: Chains, i: int, j: int) -> int:
    return len(cycles(chains, i, j)) - len(boundaries(chains, i, j))


def homology(
    chains: Chains, hom_bound: Optional[int] = None, internal_bound: Optional[int] = None
) -> Dict[Bidegree, int]:
    """Nonzero dim H_i(C)_j for i <= N, j <= J."""
    C = _ambient(chains)
    N = C.hom_bound if hom_bound is None else hom_bound
    J = C.internal_bound if internal_bound is None else internal_bound
    out = {}
    for i in range(N + 1):
        for j in range(J + 1):
            if not C.dim(i, j):
                continue
            h = homology_dim(chains, i, j)
            if h:
                out[(i, j)] = h
    return out


def euler_characteristic(C: BidegreeComplex, j: int, hom_bound: Optional[int] = None) -> Tuple[int, int]:
    """(sum (-1)^i dim C_{i,j}, sum (-1)^i dim H_i(C)_j) over i <= N."""
    N = C.hom_bound if hom_bound is None else hom_bound
    chain = sum((-1) ** i * C.dim(i, j) for i in range(N + 1))
    hom = sum((-1) ** i * homology_dim(C, i, j) for i in range(N + 1) if C.dim(i, j))
    return chain, hom


# ============================================================================
# Induced maps
# ============================================================================


@dataclass
class HomologyMap:
    """Map H(source) -> H(target) induced by an inclusion of subcomplexes."""

    source: str
    target: str
    bounds: Tuple[int, int]
    ranks: Dict[Bidegree, int] = dc_field(default_factory=dict)
    matrices: Dict[Bidegree, List[Vector]] = dc_field(default_factory=dict)
    witnesses: Dict[Bidegree, Vector] = dc_field(default_factory=dict)

    def is_zero(self) -> bool:
        return not any(self.ranks.values())

    def first_nonzero(self) -> Optional[Bidegree]:
        hits = sorted(b for b, r in self.ranks.items() if r)
        return hits[0] if hits else None


def induced_map_at(source: Chains, target: Chains, i: int, j: int) -> Tuple[List[Vector], Optional[Vector]]:
    """Matrix of H_i(source)_j -> H_i(target)_j and a source cycle with nonzero image."""
    f = _ambient(target).algebra.field
    outer = EchelonBasis(f, tracked=True)
    for b in boundaries(target, i, j):
        outer.insert(b, {})
    classes = 0
    for z in cycles(target, i, j):
        if outer.insert(z, {classes: f.one}) is None:
            classes += 1

    inner = EchelonBasis(f)
    for b in boundaries(source, i, j):
        inner.add(b)
    columns: List[Vector] = []
    witness = None
    for z in cycles(source, i, j):
        if not inner.add(z):
            continue
        col = outer.express(z) or {}
        columns.append(col)
        if col and witness is None:
            witness = z
    return columns, witness


def nu_map(
    C: BidegreeComplex,
    inner: GradedIdealSlice,
    outer: GradedIdealSlice,
    hom_bound: Optional[int] = None,
    internal_bound: Optional[int] = None,
) -> HomologyMap:
    """H(inner*C) -> H(outer*C) for inner ⊆ outer."""
    N = C.hom_bound if hom_bound is None else hom_bound
    J = C.internal_bound if internal_bound is None else internal_bound
    src = scale_by_ideal(C, inner)
    dst = scale_by_ideal(C, outer)
    result = HomologyMap(src.label, dst.label, (N, J))
    f = C.algebra.field
    for i in range(N + 1):
        for j in range(J + 1):
            if not src.dim(i, j):
                continue
            columns, witness = induced_map_at(src, dst, i, j)
            if not columns:
                continue
            r = EchelonBasis(f)
            for col in columns:
                r.add(col)
            result.ranks[(i, j)] = r.rank
            result.matrices[(i, j)] = columns
            if witness is not None:
                result.witnesses[(i, j)] = witness
    logger.debug(f"ν map {result.source} -> {result.target}: ranks {result.ranks}")
    return result


@dataclass
class NuVerdict:
    vanishes: bool
    bounds: Tuple[int, int]
    complex_name: str
    witness_bidegree: Optional[Bidegree] = None
    witness: Optional[str] = None

    def describe(self) -> str:
        N, J = self.bounds
        if self.vanishes:
            return f"ν(m{self.complex_name}) = 0 up to ({N},{J})"
        return (
            f"ν(m{self.complex_name}) != 0: class {self.witness} at bidegree {self.witness_bidegree} "
            f"(up to ({N},{J}))"
        )


def nu_vanishes(
    C: BidegreeComplex, hom_bound: Optional[int] = None, internal_bound: Optional[int] = None
) -> NuVerdict:
    """ν(mC): the map H(m^2 C) -> H(mC); a witness cycle of m^2 C when it is nonzero."""
    alg = C.algebra
    N = C.hom_bound if hom_bound is None else hom_bound
    J = C.internal_bound if internal_bound is None else internal_bound
    m1 = GradedIdealSlice.power(alg, 1, alg.truncation)
    m2 = GradedIdealSlice.power(alg, 2, alg.truncation)
    induced = nu_map(C, m2, m1, N, J)
    hit = induced.first_nonzero()
    if hit is None:
        return NuVerdict(True, (N, J), C.name)
    i, j = hit
    text = C.format_vector(i, j, induced.witnesses[hit])
    logger.info(f"ν(m{C.name}) is nonzero at {hit}")
    return NuVerdict(False, (N, J), C.name, hit, text)
