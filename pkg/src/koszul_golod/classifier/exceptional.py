"""Exceptional rings: Hilbert series (1 + 2t - 2t^3)/(1 - t) after socle reduction.

Next to the series test the ring is compared with the known normal forms:
over F_2 the NK1, NK2, NK3 families up to GL_3(F_2), elsewhere the three
rings of the characteristic != 2 classification up to permutations and
sign changes of the variables.
"""

import itertools
import logging
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..algebra.graded import GradedAlgebra, QuadraticPresentation
from ..core.field import Field
from ..core.parsing import parse_polynomial
from ..core.polynomial import Polynomial, quadric_space
from ..models.reports import ExceptionalReport
from ..utils.linalg import is_invertible, rank

logger = logging.getLogger(__name__)

EXCEPTIONAL_NUMERATOR = (1, 2, 0, -2)

# Relations in x, y, z.
NK_FAMILIES: Dict[str, Tuple[str, ...]] = {
    "NK1(a=0)": ("x*y", "x^2 - y*z", "y^2 - x*z"),
    "NK1(a=1)": ("x*y", "x^2 - y*z", "y^2 - y*z - x*z"),
    "NK2(g=0)": ("x*y", "x^2 - y*z", "z^2"),
    "NK2(g=1)": ("x*y", "x^2 - y*z", "z^2 - x*z"),
}
for _a, _b, _g in itertools.product((0, 1), repeat=3):
    if (_a, _g) != (0, 0):
        NK_FAMILIES[f"NK3(a={_a},b={_b},g={_g})"] = (
            "x*y",
            f"z^2 + {_a}*y^2 + {_b}*y*z",
            f"x*z + y*z + {_g}*x^2",
        )

CLASSIFIED_RINGS: Dict[str, Tuple[str, ...]] = {
    "(i)": ("y^2 + x*y", "x*y + z^2", "x*z"),
    "(ii)": ("y^2", "x*y + z^2", "x*z"),
    "(iii)": ("y^2", "x*y + y*z + z^2", "x*z"),
}


def exceptional_prefix(upto: int) -> List[int]:
    """1, 3, 3, 1, 1, ... up to degree ``upto``."""
    return [1, 3, 3][: upto + 1] + [1] * max(0, upto - 2)


def _span_equal(field: Field, first: Sequence[Polynomial], second: Sequence[Polynomial], n: int) -> bool:
    _, a = quadric_space(first, n)
    _, b = quadric_space(second, n)
    ra, rb = rank(field, a), rank(field, b)
    return ra == rb and rank(field, a + b) == ra


def _monomial_matrices(field: Field, n: int) -> Iterator[List[List[object]]]:
    signs = [field.one] if field.characteristic == 2 else [field.one, field.neg(field.one)]
    for perm in itertools.permutations(range(n)):
        for choice in itertools.product(signs, repeat=n):
            yield [[choice[i] if perm[i] == j else field.zero for j in range(n)] for i in range(n)]


def _general_linear(field: Field, n: int) -> Iterator[List[List[object]]]:
    elements = list(field.elements())
    for entries in itertools.product(elements, repeat=n * n):
        matrix = [list(entries[i * n : (i + 1) * n]) for i in range(n)]
        if is_invertible(field, matrix):
            yield matrix


def normal_form_matches(presentation: QuadraticPresentation) -> List[str]:
    """Every normal form the presentation is isomorphic to, in listing order (e = 3 only).

    The F_2 families overlap, e.g. NK2(g=0) and NK3(a=1,b=0,g=0).
    """
    f = presentation.field
    n = presentation.nvars
    if n != 3 or len(presentation.relations) != 3:
        return []
    if f.is_finite and f.order == 2:
        families, matrices = NK_FAMILIES, list(_general_linear(f, 3))
    else:
        families, matrices = CLASSIFIED_RINGS, list(_monomial_matrices(f, 3))
    targets = {
        name: [parse_polynomial(t, ("x", "y", "z"), f) for t in texts] for name, texts in families.items()
    }
    relations = list(presentation.relations)
    images = [[r.linear_change(matrix) for r in relations] for matrix in matrices]
    found = []
    for name, target in targets.items():
        if any(_span_equal(f, changed, target, 3) for changed in images):
            logger.debug(f"normal form {name} matched")
            found.append(name)
    return found


def normal_form_match(presentation: QuadraticPresentation) -> Optional[str]:
    """First listed normal form the presentation is isomorphic to, if any."""
    found = normal_form_matches(presentation)
    return found[0] if found else None


def detect_exceptional(algebra: GradedAlgebra, upto: Optional[int] = None) -> ExceptionalReport:
    """Exceptional iff h = (1,3,3,1,1,...) to ``upto`` and the series equals (1+2t-2t^3)/(1-t).

    The input should be socle-reduced; a trivial fiber extension of an
    exceptional ring has a different series.
    """
    top = algebra.truncation if upto is None else min(upto, algebra.truncation)
    h = algebra.h[: top + 1]
    prefix = h == exceptional_prefix(top)
    exact = algebra.hilbert.matches(EXCEPTIONAL_NUMERATOR, 1)
    matches = normal_form_matches(algebra.presentation) if exact else []
    evidence = f"H(t) = {algebra.hilbert.format()}; h = {h}"
    if len(matches) > 1:
        evidence += f"; isomorphic to {', '.join(matches)} (the families are not disjoint)"
    if exact and not prefix:
        logger.warning("Series is exceptional but the prefix disagrees; the truncation is suspect")
    return ExceptionalReport(
        exceptional=exact and prefix,
        h_prefix_matches=prefix,
        normal_form=matches[0] if matches else None,
        normal_form_matches=matches,
        evidence=evidence,
    )
