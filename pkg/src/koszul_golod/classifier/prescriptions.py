"""Witness quadrics prescribed by each structural case.

Quadrics are written in the case coordinates x1..xe (forms of R_1 in the
original variables) and lifted to Q. A typical witness is

  f_j = x_j^2 - x_1 a_j - x_2 b_j

with a_j, b_j linear forms in the coordinates other than x_1, solved for
in R_2 so that f_j maps to zero in R.
"""

import logging
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from ..algebra.graded import GradedAlgebra, LinearForm
from ..core.polynomial import Polynomial
from ..utils.linalg import solve

logger = logging.getLogger(__name__)

# (multiplier index, indices allowed in its linear cofactor), 1-based
Cofactor = Tuple[int, Sequence[int]]
Prescription = Tuple[str, List[Polynomial]]


class _Coordinates:
    def __init__(self, algebra: GradedAlgebra, coords: Sequence[LinearForm]):
        self.algebra = algebra
        self.field = algebra.field
        self.polys = [c.to_polynomial(self.field) for c in coords]

    @property
    def e(self) -> int:
        return len(self.polys)

    def lift(self, a: int, b: int) -> Polynomial:
        return self.polys[a - 1] * self.polys[b - 1]

    def others(self, *excluded: int) -> List[int]:
        return [i for i in range(1, self.e + 1) if i not in excluded]

    def vanishing_product(self, a: int, b: int) -> Optional[Polynomial]:
        """x~_a x~_b when x_a x_b = 0 in R."""
        q = self.lift(a, b)
        return q if not self.algebra.element(q)[0] else None

    def square_relation(self, j: int, cofactors: Sequence[Cofactor]) -> Optional[Polynomial]:
        """x~_j^2 - sum_t x~_{m_t} a~_t with x_j^2 = sum_t x_{m_t} a_t in R_2, or None."""
        f = self.field
        columns = []
        pairs = []
        for mult, allowed in cofactors:
            for i in allowed:
                columns.append(self.algebra.element(self.lift(mult, i))[0])
                pairs.append((mult, i))
        target = self.algebra.element(self.lift(j, j))[0]
        coeffs = solve(f, columns, target) if columns else ({} if not target else None)
        if coeffs is None:
            return None
        q = self.lift(j, j)
        for k, c in coeffs.items():
            q = q - self.lift(*pairs[k]).scale(c)
        if q.is_zero() or self.algebra.element(q)[0]:
            return None
        return q


def _collect(label: str, quadrics: Sequence[Optional[Polynomial]]) -> List[Prescription]:
    if any(q is None for q in quadrics):
        logger.debug(f"prescription {label}: a quadric could not be solved for")
        return []
    return [(label, [q for q in quadrics if q is not None])]


def prescribed_quadrics(
    algebra: GradedAlgebra,
    case_id: str,
    coords: Sequence[LinearForm],
    params: Optional[Mapping[str, Any]] = None,
) -> List[Prescription]:
    """Witness candidates for a verified case, in the coordinates that realise it."""
    c = _Coordinates(algebra, coords)
    p: Dict[str, Any] = dict(params or {})
    e = c.e
    o1 = c.others(1)
    label = f"case {case_id}"

    if case_id == "polynomial":
        return [(label + ": P = Q", [])]
    if case_id in ("ci3", "4.2(b)"):
        return [(label + ": P = R", list(algebra.presentation.relations))]
    if case_id in ("1", "4.2(a)"):
        return _collect(label + ": (x1^2)", [c.square_relation(1, [])])
    if case_id in ("4.2(c)", "special-case", "last-one") and e >= 3:
        return _collect(label + ": (x2*x3)", [c.vanishing_product(2, 3)])
    if case_id == "8" and e >= 2:
        return _collect(label + ": (x1*x2)", [c.vanishing_product(1, 2)])
    if case_id == "nonA-use" and "s" in p and "t" in p:
        t = int(p["t"])
        return _collect(label + f": (x{t}^2)", [c.square_relation(t, [])])
    if case_id == "2" and e >= 2:
        j = int(p.get("j", 2))
        f2 = c.square_relation(2, [(1, o1)])
        if j == 2:
            return _collect(label + ": (f2)", [f2])
        fj = c.square_relation(j, [(1, o1), (2, o1)])
        return _collect(label + f": (f2, f{j})", [f2, fj])
    if case_id == "3" and e >= 3:
        f1 = c.square_relation(1, [])
        g = c.square_relation(3, [(1, o1), (3, [2])])
        return _collect(label + ": (x1^2, g)", [f1, g])
    if case_id == "4" and e >= 3:
        return _collect(label + ": (f1, f2)", [c.square_relation(1, []), c.square_relation(2, [(1, o1)])])
    if case_id == "5" and e >= 4:
        f4 = c.square_relation(4, [(1, o1), (2, [3])])
        return _collect(label + ": (f1, f4)", [c.square_relation(1, []), f4])
    if case_id == "6" and e >= 3:
        j = int(p.get("j", 2))
        o13 = c.others(1, 3)
        quadrics = [c.square_relation(2, [(1, o13)]), c.square_relation(3, [(1, o13)])]
        if j != 2:
            quadrics.append(c.square_relation(j, [(1, o13), (2, o13)]))
        return _collect(label + ": (" + ", ".join(f"f{n}" for n in sorted({2, 3, j})) + ")", quadrics)
    if case_id == "7" and e >= 3:
        indices = sorted({2, int(p.get("i", 2)), int(p.get("j", 3))})
        quadrics = []
        for n in indices:
            if n == 2:
                quadrics.append(c.square_relation(2, [(1, o1)]))
            elif n == 3:
                quadrics.append(c.square_relation(3, [(1, o1), (2, o1)]))
            else:
                quadrics.append(c.square_relation(n, [(1, o1), (2, o1), (3, o1)]))
        return _collect(label + ": (" + ", ".join(f"f{n}" for n in indices) + ")", quadrics)
    return []
