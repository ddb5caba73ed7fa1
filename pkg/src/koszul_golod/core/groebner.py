"""Buchberger's algorithm for homogeneous ideals, normal forms and standard monomials.

Pairs are selected by the normal strategy (degree of the lcm, then the term
order) with Gebauer-Moeller pair elimination; ties are broken by index, so
the output is fixed for a fixed input and order.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .polynomial import (
    Monomial,
    MonomialOrder,
    Polynomial,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
    monomials_of_degree,
)

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass
class GroebnerBasis:
    """Reduced monic Groebner basis together with its order and source generators.

    ``complete`` is False when a degree bound cut the computation short; the
    polynomials are then only a truncated basis, valid up to ``degree_bound``.
    """

    polys: List[Polynomial]
    order: MonomialOrder
    generators: List[Polynomial] = field(default_factory=list)
    complete: bool = True
    degree_bound: Optional[int] = None

    def __post_init__(self) -> None:
        self.leading = [g.leading_monomial(self.order) for g in self.polys]

    def __len__(self) -> int:
        return len(self.polys)

    @property
    def is_quadratic(self) -> bool:
        return all(sum(m) == 2 for m in self.leading)

    def normal_form(self, p: Polynomial) -> Polynomial:
        return reduce(p, self.polys, self.order, self.leading)


def spoly(f: Polynomial, g: Polynomial, lmf: Monomial, lmg: Monomial) -> Polynomial:
    """S-polynomial of monic f and g."""
    lcm = monomial_lcm(lmf, lmg)
    s1 = f.mul_monomial(tuple(a - b for a, b in zip(lcm, lmf)))
    s2 = g.mul_monomial(tuple(a - b for a, b in zip(lcm, lmg)))
    return s1 - s2


def reduce(
    g: Polynomial,
    F: Sequence[Polynomial],
    order: MonomialOrder,
    lmF: Optional[Sequence[Monomial]] = None,
) -> Polynomial:
    """Full remainder of g on division by the monic polynomials F."""
    fld = g.field
    lmF = [f.leading_monomial(order) for f in F] if lmF is None else lmF
    work: Dict[Monomial, object] = dict(g.terms)
    remainder: Dict[Monomial, object] = {}
    key = order.key
    while work:
        lm = max(work, key=key)
        c = work[lm]
        for f, lmf in zip(F, lmF):
            quotient = monomial_div(lm, lmf)
            if quotient is None:
                continue
            neg = fld.neg(c)
            for m, v in f.terms.items():
                mm = monomial_mul(m, quotient)
                nv = fld.add(work.get(mm, fld.zero), fld.mul(neg, v))
                if fld.is_zero(nv):
                    work.pop(mm, None)
                else:
                    work[mm] = nv
            break
        else:
            remainder[lm] = c
            del work[lm]
    return Polynomial(fld, g.nvars, remainder)


def select(G: Sequence[Polynomial], P: Set[Pair], lmG: Sequence[Monomial], order: MonomialOrder) -> Pair:
    """Pair with the smallest lcm (degree first, then order, then indices)."""

    def strategy_key(p: Pair) -> tuple:
        lcm = monomial_lcm(lmG[p[0]], lmG[p[1]])
        return (sum(lcm), order.key(lcm), p[0], p[1])

    return min(P, key=strategy_key)


def update(
    G: List[Polynomial],
    P: Set[Pair],
    f: Polynomial,
    lmG: List[Monomial],
    order: MonomialOrder,
) -> Tuple[List[Polynomial], Set[Pair]]:
    """Add f to the basis and update the pair set (Gebauer-Moeller criteria)."""
    lmf = f.leading_monomial(order)
    lcm = monomial_lcm

    P = {
        p
        for p in P
        if (
            not monomial_divides(lmf, lcm(lmG[p[0]], lmG[p[1]]))
            or lcm(lmG[p[0]], lmG[p[1]]) == lcm(lmG[p[0]], lmf)
            or lcm(lmG[p[0]], lmG[p[1]]) == lcm(lmG[p[1]], lmf)
        )
    }
    lcm_dict: Dict[Monomial, List[int]] = {}
    for i in range(len(G)):
        lcm_dict.setdefault(lcm(lmG[i], lmf), []).append(i)
    minimalized: List[Monomial] = []
    for L in sorted(lcm_dict, key=lambda m: (sum(m), order.key(m))):
        if all(not monomial_divides(L_, L) for L_ in minimalized):
            minimalized.append(L)
    new_pairs = set()
    for L in minimalized:
        if not any(lcm(lmG[i], lmf) == monomial_mul(lmG[i], lmf) for i in lcm_dict[L]):
            new_pairs.add((min(lcm_dict[L]), len(G)))
    lmG.append(lmf)
    return G + [f], P | new_pairs


def minimalize(G: Sequence[Polynomial], order: MonomialOrder) -> List[Polynomial]:
    """Minimal Groebner basis from an arbitrary one."""
    Gmin: List[Polynomial] = []
    lms: List[Monomial] = []
    for f in sorted(G, key=lambda h: order.key(h.leading_monomial(order))):
        lm = f.leading_monomial(order)
        if all(not monomial_divides(m, lm) for m in lms):
            Gmin.append(f)
            lms.append(lm)
    return Gmin


def interreduce(G: Sequence[Polynomial], order: MonomialOrder) -> List[Polynomial]:
    """Reduced Groebner basis from a minimal one."""
    Gred = []
    for i in range(len(G)):
        g = reduce(G[i], list(G[:i]) + list(G[i + 1:]), order)
        Gred.append(g.monic(order))
    return Gred


def buchberger(
    gens: Sequence[Polynomial],
    order: MonomialOrder,
    degree_bound: Optional[int] = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by homogeneous ``gens``.

    With ``degree_bound`` set, pairs whose lcm exceeds the bound are dropped
    and the result is flagged incomplete if any were.
    """
    for g in gens:
        if not g.is_homogeneous():
            raise ValueError("buchberger() expects homogeneous generators")

    G: List[Polynomial] = []
    lmG: List[Monomial] = []
    P: Set[Pair] = set()
    for f in gens:
        r = reduce(f, G, order, lmG) if G else f
        if r:
            G, P = update(G, P, r.monic(order), lmG, order)

    complete = True
    reductions = 0
    while P:
        i, j = select(G, P, lmG, order)
        P.remove((i, j))
        if degree_bound is not None and sum(monomial_lcm(lmG[i], lmG[j])) > degree_bound:
            complete = False
            continue
        s = spoly(G[i], G[j], lmG[i], lmG[j])
        r = reduce(s, G, order, lmG)
        reductions += 1
        if r:
            G, P = update(G, P, r.monic(order), lmG, order)

    basis = interreduce(minimalize(G, order), order)
    basis.sort(key=lambda h: order.key(h.leading_monomial(order)))
    logger.debug(
        f"buchberger: {len(gens)} generators -> {len(basis)} elements "
        f"({reductions} reductions, order {order.kind})"
    )
    return GroebnerBasis(
        polys=basis,
        order=order,
        generators=list(gens),
        complete=complete,
        degree_bound=degree_bound,
    )


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    return gb.normal_form(p)


def standard_monomials(gb: GroebnerBasis, degree: int, nvars: Optional[int] = None) -> List[Monomial]:
    """Degree-d monomials outside the lead-term ideal, largest first."""
    if nvars is None:
        if gb.polys:
            nvars = gb.polys[0].nvars
        else:
            nvars = gb.order.nvars
    out = [
        m
        for m in monomials_of_degree(nvars, degree)
        if not any(monomial_divides(lm, m) for lm in gb.leading)
    ]
    out.sort(key=gb.order.key, reverse=True)
    return out


def is_g_quadratic(gens: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """True when the ideal of quadrics ``gens`` has a quadratic Groebner basis for ``order``.

    Pairs of quadrics with lcm of degree 4 have coprime leading terms, so a
    basis complete to degree 3 settles the question.
    """
    gb = buchberger(gens, order, degree_bound=3)
    return gb.is_quadratic
