"""Find a structural case and the coordinates x1..xe that realise it.

The search starts from a null-square form x (x^2 = 0), records rank(x)
and the subspaces V = ann(x) ∩ R_1, W = {r : r m ⊆ x m}, W' = V ∩ W, and
then walks candidate coordinate systems case by case. Each coordinate is
drawn from a pool: null-square forms, the annihilator of an earlier
coordinate, or all of R_1. The named coordinates are completed to a basis
and handed to condition_check; the first case that holds wins.
"""

import logging
from dataclasses import dataclass, field as dc_field
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple, Union

from .. import config
from ..algebra.conditions import condition_check
from ..algebra.graded import GradedAlgebra, LinearForm
from ..algebra.structure import (
    annihilator_forms,
    candidate_points,
    complete_to_basis,
    coordinates_change,
    form_subspaces,
    forms_independent,
    null_square_forms,
    null_square_search,
    points_in_span,
)
from ..models.reports import StructureReport

logger = logging.getLogger(__name__)

# Pool of a coordinate: "null", "any", or ("ann", k) for ann(x_k) ∩ R_1.
Pool = Union[str, Tuple[str, int]]

CASE_POOLS: Dict[str, Tuple[Pool, ...]] = {
    "1": ("null",),
    "2": ("null", "any"),
    "3": ("null", ("ann", 1)),
    "4": ("null", "any", ("ann", 1)),
    "5": ("null", "any", "any", ("ann", 1)),
    "6": ("null", "any", ("ann", 1)),
    "7": ("null", "any", "any"),
    "8": ("any", ("ann", 1)),
    "4.2(a)": ("null", ("ann", 1)),
    "4.2(c)": ("null", ("ann", 1), ("ann", 2)),
    "special-case": ("null", ("ann", 1), ("ann", 2)),
    "last-one": ("null", ("ann", 1), ("ann", 2), ("ann", 1)),
}

# Cases that are properties of the ring, checked once in the given variables.
WHOLE_RING_CASES = ("polynomial", "ci3", "4.2(b)")

ARTINIAN_ORDER = ("ci3", "1", "8", "2", "3", "4", "5", "6", "7")
DIM2_ORDER = ("4.2(b)", "4.2(a)", "4.2(c)")
DIM3_ORDER = ("4.2(a)", "last-one")


@dataclass
class StructureMatch:
    report: StructureReport
    coords: List[LinearForm] = dc_field(default_factory=list)
    params: Dict[str, Any] = dc_field(default_factory=dict)

    @property
    def case_id(self) -> Optional[str]:
        return self.report.case_id


def default_case_order(algebra: GradedAlgebra) -> Tuple[str, ...]:
    if not algebra.presentation.relations:
        return ("polynomial",)
    if algebra.is_artinian():
        return ARTINIAN_ORDER
    if algebra.dim(2) <= 2:
        return DIM2_ORDER
    return DIM3_ORDER


def _fmt(algebra: GradedAlgebra, forms: Sequence[LinearForm]) -> List[str]:
    return [x.format(algebra.field, algebra.names) for x in forms]


class _Pools:
    def __init__(self, algebra: GradedAlgebra, first_null: Optional[LinearForm], enum_limit: int):
        self.algebra = algebra
        self.enum_limit = enum_limit
        f = algebra.field
        null = [first_null] if first_null is not None else []
        null += [x for x in null_square_forms(algebra, enum_limit) if x != first_null]
        self.null = null
        self.any = [LinearForm(p) for p in candidate_points(f, algebra.nvars, enum_limit)]
        self._ann: Dict[LinearForm, List[LinearForm]] = {}

    def pool(self, kind: Pool, chosen: Sequence[LinearForm]) -> List[LinearForm]:
        if kind == "null":
            return self.null
        if kind == "any":
            return self.any
        _, k = kind
        base = chosen[int(k) - 1]
        if base not in self._ann:
            f = self.algebra.field
            V = annihilator_forms(self.algebra, base)
            points = points_in_span(f, [x.coeffs for x in V], self.enum_limit)
            self._ann[base] = [LinearForm(p) for p in points if any(not f.is_zero(c) for c in p)]
        return self._ann[base]


def _assignments(pools: _Pools, kinds: Sequence[Pool]) -> Iterator[List[LinearForm]]:
    f = pools.algebra.field

    def walk(chosen: List[LinearForm]) -> Iterator[List[LinearForm]]:
        if len(chosen) == len(kinds):
            yield list(chosen)
            return
        for form in pools.pool(kinds[len(chosen)], chosen):
            if forms_independent(f, chosen + [form]):
                yield from walk(chosen + [form])

    return walk([])


def match_structure(
    algebra: GradedAlgebra,
    cases: Optional[Sequence[str]] = None,
    budget: Optional[int] = None,
    enum_limit: Optional[int] = None,
    random_trials: Optional[int] = None,
    seed: Optional[int] = None,
    extension_retry: bool = False,
    bounds: Tuple[int, int] = (6, 8),
) -> StructureMatch:
    """First (case, coordinates) verified by condition_check, with the search log.

    ``budget`` caps the number of coordinate systems tried per case. The
    algebra should be socle-reduced and built to internal degree >= 4.
    """
    f = algebra.field
    n = algebra.nvars
    budget = config.STRUCTURE_BUDGET if budget is None else budget
    enum_limit = config.ENUM_LIMIT if enum_limit is None else enum_limit
    random_trials = config.RANDOM_TRIALS if random_trials is None else random_trials
    seed = config.SEED if seed is None else seed
    order = tuple(cases) if cases is not None else default_case_order(algebra)
    report = StructureReport()
    identity = [LinearForm.variable(f, n, k) for k in range(n)]

    for case_id in order:
        if case_id not in WHOLE_RING_CASES:
            continue
        report.tried += 1
        result = condition_check(algebra, case_id, bounds=bounds)
        if result.holds:
            report.case_id = case_id
            report.coordinates = _fmt(algebra, identity)
            report.ladder.append(f"case {case_id} holds in the given variables")
            return StructureMatch(report, identity, dict(result.params))
        report.ladder.append(f"case {case_id}: {result.failing_clause}")

    searched = [c for c in order if c in CASE_POOLS]
    if not searched or n == 0:
        return StructureMatch(report)

    ns = null_square_search(algebra, enum_limit, random_trials, seed, extension_retry)
    report.ladder.extend(ns.ladder)
    if ns.form is not None:
        report.null_square_form = ns.form.format(f, algebra.names)
        sub = form_subspaces(algebra, ns.form)
        report.rank = sub.rank
        report.subspaces = {
            "V": _fmt(algebra, sub.V),
            "W": _fmt(algebra, sub.W),
            "W'": _fmt(algebra, sub.W_prime),
        }
    pools = _Pools(algebra, ns.form, enum_limit)
    logger.debug(f"match_structure: {len(pools.null)} null-square forms, {len(pools.any)} points")

    for case_id in searched:
        kinds = CASE_POOLS[case_id]
        if len(kinds) > n:
            report.ladder.append(f"case {case_id}: needs e >= {len(kinds)}")
            continue
        tried = 0
        for named in _assignments(pools, kinds):
            if tried >= budget:
                report.ladder.append(f"case {case_id}: budget of {budget} assignments spent")
                break
            tried += 1
            coords = complete_to_basis(f, named, n)
            assignment = {f"x{i + 1}": x for i, x in enumerate(coords)}
            result = condition_check(algebra, case_id, assignment, bounds=bounds)
            if result.holds:
                report.tried += tried
                report.case_id = case_id
                report.coordinates = _fmt(algebra, coords)
                report.params = {k: str(v) for k, v in result.params.items()}
                report.relations = coordinates_change(algebra.presentation, coords).relation_texts()
                report.ladder.append(f"case {case_id} holds after {tried} assignments")
                logger.info(f"Structural case {case_id} matched with x1 = {report.coordinates[0]}")
                return StructureMatch(report, coords, dict(result.params))
        else:
            report.ladder.append(f"case {case_id}: no assignment among {tried}")
        report.tried += tried
    logger.info(f"No structural case matched after {report.tried} checks")
    return StructureMatch(report)
