"""Regular sequences of quadrics, recognised by their Hilbert series."""

import logging
from typing import Optional, Sequence

from ..algebra.hilbert import complete_intersection_series, hilbert_series
from ..core.groebner import buchberger
from ..core.polynomial import MonomialOrder, Polynomial

logger = logging.getLogger(__name__)


def is_regular_sequence(quadrics: Sequence[Polynomial], nvars: Optional[int] = None) -> bool:
    """True iff H_{Q/(f)}(t) = (1-t^2)^d / (1-t)^e.

    A sequence of d quadrics is regular exactly when Q/(f) has the Hilbert
    series of a complete intersection, so one Gröbner basis settles it.
    Anything that is not a nonzero homogeneous quadric makes the answer False.
    """
    if nvars is None:
        if not quadrics:
            return True
        nvars = quadrics[0].nvars
    for q in quadrics:
        if q.is_zero() or not q.is_homogeneous() or q.degree != 2 or q.nvars != nvars:
            logger.debug("is_regular_sequence: input is not a list of quadrics")
            return False
    if len(quadrics) > nvars:
        return False
    gb = buchberger(list(quadrics), MonomialOrder.grevlex(nvars))
    series = hilbert_series(gb.leading, nvars)
    expected = complete_intersection_series(nvars, len(quadrics))
    regular = series.matches(expected.numerator, expected.dimension)
    logger.debug(f"is_regular_sequence: d={len(quadrics)}, series {series.format()} -> {regular}")
    return regular
