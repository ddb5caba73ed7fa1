"""Structural condition sets on a coordinate system x1, ..., xe of R_1.

A condition set is a list of clauses over ideal terms such as ``x1*m``,
``ann(b)*m`` or ``(x2^2 - x1*x3)``. Every clause is checked degreewise
through the ideal slices of ``ideals.py`` up to a small depth; all ideals
involved are generated in degree at most 2, so depth 3 suffices for the
equalities and the annihilator intersections.

Names in a clause may contain index placeholders (``x{s}``, ``x{j}``) that
are filled from the case parameters or chosen while the clauses run.
"""

import logging
from dataclasses import dataclass, field as dc_field
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..utils.errors import UnknownCaseError
from ..utils.linalg import Vector, rank
from .graded import GradedAlgebra, LinearForm
from .hilbert import complete_intersection_series
from .ideals import (
    GradedIdealSlice,
    annihilator,
    contains,
    equals,
    ideal_intersection,
    ideal_product,
    ideal_sum,
)

logger = logging.getLogger(__name__)

# Element of R_2 as a sum of coeff * x_a * x_b.
Quadric = Tuple[Tuple[int, str, str], ...]


class _Undefined(Exception):
    """A clause refers to a variable the coordinate system does not have."""


# ============================================================================
# Evaluation context
# ============================================================================


@dataclass
class ConditionContext:
    algebra: GradedAlgebra
    coords: List[LinearForm]
    params: Dict[str, Any]
    depth: int
    bounds: Tuple[int, int] = (6, 8)
    _cache: Dict[str, GradedIdealSlice] = dc_field(default_factory=dict, repr=False)

    @property
    def e(self) -> int:
        return len(self.coords)

    def resolve(self, name: str) -> str:
        try:
            return name.format(**self.params)
        except KeyError as exc:
            raise UnknownCaseError(f"Missing case parameter {exc.args[0]!r} for {name!r}") from exc

    def form(self, name: str) -> LinearForm:
        resolved = self.resolve(name)
        i = int(resolved.lstrip("x"))
        if not 1 <= i <= self.e:
            raise _Undefined(f"{resolved} is not defined (e={self.e})")
        return self.coords[i - 1]

    def element(self, quadric: Quadric) -> Vector:
        alg = self.algebra
        f = alg.field
        out: Vector = {}
        for c, a, b in quadric:
            prod = alg.times_linear(self.form(a), alg.linear_element(self.form(b)), 1)
            f.axpy(out, prod, f.from_int(c))
        return out

    def ideal(self, term: "IdealTerm") -> GradedIdealSlice:
        key = self.resolve(str(term))
        cached = self._cache.get(key)
        if cached is None:
            cached = term.build(self)
            self._cache[key] = cached
        return cached


# ============================================================================
# Ideal terms
# ============================================================================


class IdealTerm:
    def build(self, ctx: ConditionContext) -> GradedIdealSlice:
        raise NotImplementedError

    def __add__(self, other: "IdealTerm") -> "IdealTerm":
        return Sum(self, other)

    def __mul__(self, other: "IdealTerm") -> "IdealTerm":
        return Prod(self, other)

    def __and__(self, other: "IdealTerm") -> "IdealTerm":
        return Meet(self, other)


class Max(IdealTerm):
    def __init__(self, power: int = 1):
        self.power = power

    def build(self, ctx: ConditionContext) -> GradedIdealSlice:
        return GradedIdealSlice.power(ctx.algebra, self.power, ctx.depth)

    def __str__(self) -> str:
        return "m" if self.power == 1 else f"m^{self.power}"


class Gen(IdealTerm):
    """Ideal generated by coordinate forms."""

    def __init__(self, *names: str):
        self.names = names

    def build(self, ctx: ConditionContext) -> GradedIdealSlice:
        forms = [ctx.form(n) for n in self.names]
        return GradedIdealSlice.from_linear_forms(ctx.algebra, forms, ctx.depth, str(self))

    def __str__(self) -> str:
        if len(self.names) == 1:
            return self.names[0]
        return "(" + ",".join(self.names) + ")"


class Param(IdealTerm):
    """Ideal named by a case parameter: a list of variable indices, or "m"."""

    def __init__(self, name: str):
        self.name = name

    def build(self, ctx: ConditionContext) -> GradedIdealSlice:
        value = ctx.params.get(self.name)
        if value is None:
            raise UnknownCaseError(f"Missing case parameter {self.name!r}")
        if value == "m":
            return GradedIdealSlice.power(ctx.algebra, 1, ctx.depth)
        forms = [ctx.form(f"x{i}") for i in value]
        return GradedIdealSlice.from_linear_forms(ctx.algebra, forms, ctx.depth, self.name)

    def __str__(self) -> str:
        return self.name


class Elems(IdealTerm):
    """Ideal generated by quadrics in the coordinates."""

    def __init__(self, *quadrics: Quadric):
        self.quadrics = quadrics

    def build(self, ctx: ConditionContext) -> GradedIdealSlice:
        gens = [(ctx.element(q), 2) for q in self.quadrics]
        return GradedIdealSlice.from_generators(ctx.algebra, gens, ctx.depth, str(self))

    def __str__(self) -> str:
        return "(" + ", ".join(format_quadric(q) for q in self.quadrics) + ")"


class Sum(IdealTerm):
    def __init__(self, a: IdealTerm, b: IdealTerm):
        self.a, self.b = a, b

    def build(self, ctx: ConditionContext) -> GradedIdealSlice:
        return ideal_sum(ctx.ideal(self.a), ctx.ideal(self.b))

    def __str__(self) -> str:
        return f"{self.a} + {self.b}"


class Prod(IdealTerm):
    def __init__(self, a: IdealTerm, b: IdealTerm):
        self.a, self.b = a, b

    def build(self, ctx: ConditionContext) -> GradedIdealSlice:
        return ideal_product(ctx.ideal(self.a), ctx.ideal(self.b))

    def __str__(self) -> str:
        left = f"({self.a})" if isinstance(self.a, (Sum, Meet)) else str(self.a)
        right = f"({self.b})" if isinstance(self.b, (Sum, Meet)) else str(self.b)
        return f"{left}{right}"


class Meet(IdealTerm):
    def __init__(self, a: IdealTerm, b: IdealTerm):
        self.a, self.b = a, b

    def build(self, ctx: ConditionContext) -> GradedIdealSlice:
        return ideal_intersection(ctx.ideal(self.a), ctx.ideal(self.b))

    def __str__(self) -> str:
        return f"{self.a} ∩ {self.b}"


class Ann(IdealTerm):
    def __init__(self, a: IdealTerm):
        self.a = a

    def build(self, ctx: ConditionContext) -> GradedIdealSlice:
        return annihilator(ctx.ideal(self.a), ctx.depth)

    def __str__(self) -> str:
        return f"ann({self.a})"


def prod(a: str, b: str) -> Quadric:
    return ((1, a, b),)


def diff(first: Quadric, second: Quadric) -> Quadric:
    return first + tuple((-c, a, b) for c, a, b in second)


def format_quadric(q: Quadric) -> str:
    pieces = []
    for c, a, b in q:
        body = f"{a}^2" if a == b else f"{a}{b}"
        if abs(c) != 1:
            body = f"{abs(c)}{body}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(pieces)


# ============================================================================
# Clauses
# ============================================================================


class Clause:
    def failure(self, ctx: ConditionContext) -> Optional[str]:
        """None when the clause holds, else its label with parameters filled in."""
        raise NotImplementedError


class Eq(Clause):
    def __init__(self, a: IdealTerm, b: IdealTerm):
        self.a, self.b = a, b

    def failure(self, ctx: ConditionContext) -> Optional[str]:
        if equals(ctx.ideal(self.a), ctx.ideal(self.b), ctx.depth):
            return None
        return ctx.resolve(f"{self.a} = {self.b}")


class Sub(Clause):
    """a ⊆ b"""

    def __init__(self, a: IdealTerm, b: IdealTerm):
        self.a, self.b = a, b

    def failure(self, ctx: ConditionContext) -> Optional[str]:
        if contains(ctx.ideal(self.b), ctx.ideal(self.a), ctx.depth):
            return None
        return ctx.resolve(f"{self.a} ⊆ {self.b}")


class NotSub(Clause):
    def __init__(self, a: IdealTerm, b: IdealTerm):
        self.a, self.b = a, b

    def failure(self, ctx: ConditionContext) -> Optional[str]:
        if not contains(ctx.ideal(self.b), ctx.ideal(self.a), ctx.depth):
            return None
        return ctx.resolve(f"{self.a} ⊄ {self.b}")


class Zero(Clause):
    def __init__(self, a: Quadric):
        self.a = a

    def failure(self, ctx: ConditionContext) -> Optional[str]:
        if not ctx.element(self.a):
            return None
        return ctx.resolve(f"{format_quadric(self.a)} = 0")


class Vanishes(Clause):
    def __init__(self, a: IdealTerm):
        self.a = a

    def failure(self, ctx: ConditionContext) -> Optional[str]:
        if ctx.ideal(self.a).is_zero():
            return None
        return ctx.resolve(f"{self.a} = 0")


class Holds(Clause):
    """A property of the whole ring."""

    def __init__(self, label: str, predicate: Callable[[ConditionContext], bool]):
        self.label = label
        self.predicate = predicate

    def failure(self, ctx: ConditionContext) -> Optional[str]:
        return None if self.predicate(ctx) else ctx.resolve(self.label)


class Choose(Clause):
    """Fix an index parameter from the ring, e.g. j = 2 if x1x2 != 0 else 3."""

    def __init__(self, var: str, rule: Callable[[ConditionContext], int]):
        self.var = var
        self.rule = rule

    def failure(self, ctx: ConditionContext) -> Optional[str]:
        ctx.params[self.var] = self.rule(ctx)
        return None


class ForAll(Clause):
    """Clauses for every index in a range (vacuous when the range is empty)."""

    def __init__(self, var: str, indices: Callable[[ConditionContext], Iterable[int]], clauses: Sequence[Clause]):
        self.var = var
        self.indices = indices
        self.clauses = clauses

    def failure(self, ctx: ConditionContext) -> Optional[str]:
        saved = ctx.params.get(self.var)
        try:
            for i in self.indices(ctx):
                ctx.params[self.var] = i
                failed = run_clauses(self.clauses, ctx)
                if failed:
                    return failed
            return None
        finally:
            if saved is None:
                ctx.params.pop(self.var, None)
            else:
                ctx.params[self.var] = saved


class Exists(Clause):
    """Some assignment of index parameters satisfies all clauses; the first one is kept."""

    def __init__(
        self,
        label: str,
        candidates: Callable[[ConditionContext], Iterable[Dict[str, int]]],
        clauses: Sequence[Clause],
    ):
        self.label = label
        self.candidates = candidates
        self.clauses = clauses

    def failure(self, ctx: ConditionContext) -> Optional[str]:
        for choice in self.candidates(ctx):
            trial = dict(ctx.params)
            trial.update(choice)
            saved = ctx.params
            ctx.params = trial
            if run_clauses(self.clauses, ctx) is None:
                return None
            ctx.params = saved
        return self.label


def run_clauses(clauses: Sequence[Clause], ctx: ConditionContext) -> Optional[str]:
    for clause in clauses:
        try:
            failed = clause.failure(ctx)
        except _Undefined as exc:
            return str(exc)
        if failed:
            return failed
    return None


# ============================================================================
# Condition sets
# ============================================================================


@dataclass(frozen=True)
class ConditionSet:
    case_id: str
    description: str
    clauses: Tuple[Clause, ...]
    params: Tuple[str, ...] = ()


m = Max()


def x(*names: str) -> Gen:
    return Gen(*names)


def _case6_index(ctx: ConditionContext) -> int:
    inside = ctx.ideal(x("x3") * m).contains_vector(ctx.element(prod("x1", "x2")), 2)
    return 4 if inside else 2


def _case7_candidates(ctx: ConditionContext) -> Iterable[Dict[str, int]]:
    for i in range(2, ctx.e + 1):
        for j in range(3, ctx.e + 1):
            yield {"i": i, "j": j}


def _quotient_golod_koszul(ctx: ConditionContext) -> bool:
    from ..resolutions.golod import golod_ring_test
    from ..resolutions.koszul_test import koszul_test
    from .graded import build_algebra
    from .socle import quotient_by_linear_forms

    pres, _ = quotient_by_linear_forms(ctx.algebra, [ctx.form("x{u}")])
    hom, internal = ctx.bounds
    quotient = build_algebra(pres, max(internal, 2))
    return koszul_test(quotient, hom).is_koszul and golod_ring_test(quotient, hom, internal).koszul_golod


def _others(var: str) -> Callable[[ConditionContext], Iterable[int]]:
    return lambda ctx: (i for i in range(1, ctx.e + 1) if i != ctx.params[var])


def _build_condition_sets() -> Dict[str, ConditionSet]:
    x1m = x("x1") * m
    sets = [
        ConditionSet(
            "1",
            "m^2 = x1m and x1^2 = 0",
            (Eq(Max(2), x1m), Zero(prod("x1", "x1"))),
        ),
        ConditionSet(
            "2",
            "m^2 = x1m + x2m, x1^2 = 0, x2^2 in x1m, x1m = (x1xj) with j = 2 if x1x2 != 0 else 3",
            (
                Eq(Max(2), x1m + x("x2") * m),
                Zero(prod("x1", "x1")),
                Sub(Elems(prod("x2", "x2")), x1m),
                Choose("j", lambda ctx: 2 if ctx.element(prod("x1", "x2")) else 3),
                Eq(x1m, Elems(prod("x1", "x{j}"))),
            ),
        ),
        ConditionSet(
            "3",
            "m^2 = x1m + x2m, x1^2 = 0 = x1x2, x2^2 in x1m",
            (
                Eq(Max(2), x1m + x("x2") * m),
                Zero(prod("x1", "x1")),
                Zero(prod("x1", "x2")),
                Sub(Elems(prod("x2", "x2")), x1m),
            ),
        ),
        ConditionSet(
            "4",
            "m^2 = x1m + x2(x3), x1^2 = 0 = x1x3, x2^2 in x1m",
            (
                Eq(Max(2), x1m + Elems(prod("x2", "x3"))),
                Zero(prod("x1", "x1")),
                Zero(prod("x1", "x3")),
                Sub(Elems(prod("x2", "x2")), x1m),
            ),
        ),
        ConditionSet(
            "5",
            "m^2 = x1m + x2(x3), x1^2 = 0 = x1x4, x2^2, x2x4, x4^2 - x2x3 in x1m",
            (
                Eq(Max(2), x1m + Elems(prod("x2", "x3"))),
                Zero(prod("x1", "x1")),
                Zero(prod("x1", "x4")),
                Sub(Elems(prod("x2", "x2")), x1m),
                Sub(Elems(prod("x2", "x4")), x1m),
                Sub(Elems(diff(prod("x4", "x4"), prod("x2", "x3"))), x1m),
            ),
        ),
        ConditionSet(
            "6",
            "m^2 = x1m + x2m, x1^2 = 0 = x1x3, x2^2 in x1m, x3m = (x3^2), "
            "x1m = (x1xj, x3^2) with j = 4 if x1x2 in x3m else 2",
            (
                Eq(Max(2), x1m + x("x2") * m),
                Zero(prod("x1", "x1")),
                Zero(prod("x1", "x3")),
                Sub(Elems(prod("x2", "x2")), x1m),
                Eq(x("x3") * m, Elems(prod("x3", "x3"))),
                Choose("j", _case6_index),
                Eq(x1m, Elems(prod("x1", "x{j}"), prod("x3", "x3"))),
            ),
        ),
        ConditionSet(
            "7",
            "m^2 = x1m + x2m + x3m, x1^2 = 0, x2^2 in x1m, x3^2 in (x1,x2)m, "
            "x1m = (x1xi), (x1,x2)m = (x1xi, x2xj) with x2xj not in (x1xi)",
            (
                Eq(Max(2), x1m + x("x2") * m + x("x3") * m),
                Zero(prod("x1", "x1")),
                Sub(Elems(prod("x2", "x2")), x1m),
                Sub(Elems(prod("x3", "x3")), x("x1", "x2") * m),
                Exists(
                    "no i != 1, j not in {1,2} with x1m = (x1xi), (x1,x2)m = (x1xi, x2xj), x2xj not in (x1xi)",
                    _case7_candidates,
                    (
                        Eq(x1m, Elems(prod("x1", "x{i}"))),
                        Eq(x("x1", "x2") * m, Elems(prod("x1", "x{i}"), prod("x2", "x{j}"))),
                        NotSub(Elems(prod("x2", "x{j}")), Elems(prod("x1", "x{i}"))),
                    ),
                ),
            ),
        ),
        ConditionSet(
            "8",
            "m^2 = x1m = x2m and x1x2 = 0",
            (Eq(Max(2), x1m), Eq(x1m, x("x2") * m), Zero(prod("x1", "x2"))),
        ),
        ConditionSet(
            "4.2(a)",
            "m^2 = x1m + (x2^2) and x1^2 = 0 = x1x2",
            (
                Eq(Max(2), x1m + Elems(prod("x2", "x2"))),
                Zero(prod("x1", "x1")),
                Zero(prod("x1", "x2")),
            ),
        ),
        ConditionSet(
            "4.2(b)",
            "R is a hypersurface",
            (Holds("I is principal", lambda ctx: len(ctx.algebra.presentation.relations) == 1),),
        ),
        ConditionSet(
            "4.2(c)",
            "I = (x1^2, x1x2, x2^2 - x1x3, x2x3) with e = 3",
            (
                Holds("e = 3", lambda ctx: ctx.e == 3),
                Zero(prod("x1", "x1")),
                Zero(prod("x1", "x2")),
                Zero(diff(prod("x2", "x2"), prod("x1", "x3"))),
                Zero(prod("x2", "x3")),
                Holds("dim R_2 = 2", lambda ctx: ctx.algebra.dim(2) == 2),
            ),
        ),
        ConditionSet(
            "ci3",
            "complete intersection of embedding dimension 3",
            (
                Holds("e = 3", lambda ctx: ctx.e == 3),
                Holds(
                    "H_R(t) = (1+t)^3",
                    lambda ctx: ctx.algebra.hilbert == complete_intersection_series(3, 3),
                ),
            ),
        ),
        ConditionSet(
            "polynomial",
            "R is a polynomial ring",
            (Holds("I = 0", lambda ctx: not ctx.algebra.presentation.relations),),
        ),
        ConditionSet(
            "prop-1",
            "mb = x{t}b = x{s}b and x{t}x{s} in ann(b)m",
            (
                Eq(m * Param("b"), x("x{t}") * Param("b")),
                Eq(x("x{t}") * Param("b"), x("x{s}") * Param("b")),
                Sub(Elems(prod("x{t}", "x{s}")), Ann(Param("b")) * m),
            ),
            ("s", "t", "b"),
        ),
        ConditionSet(
            "use-golod",
            "x{u}m = (x{u}x{s}) = (x{u}x{t}), x{s}x{t} in ann(x{u})m, R/(x{u}) Golod and Koszul",
            (
                Eq(x("x{u}") * m, Elems(prod("x{u}", "x{s}"))),
                Eq(x("x{u}") * m, Elems(prod("x{u}", "x{t}"))),
                Sub(Elems(prod("x{s}", "x{t}")), Ann(x("x{u}")) * m),
                Holds("R/(x{u}) is Golod and Koszul", _quotient_golod_koszul),
            ),
            ("s", "t", "u"),
        ),
        ConditionSet(
            "mix",
            "x{s}x{t} = 0 and m^2 = xm + am, xa = 0 for x in {x{t}, x{s}}",
            (
                Zero(prod("x{s}", "x{t}")),
                Eq(Max(2), x("x{t}") * m + Param("a") * m),
                Eq(Max(2), x("x{s}") * m + Param("a") * m),
                Vanishes(x("x{t}") * Param("a")),
                Vanishes(x("x{s}") * Param("a")),
            ),
            ("s", "t", "a"),
        ),
        ConditionSet(
            "apply-st",
            "x{s}x{t} = 0 and m^2 = x{s}m = x{t}m",
            (
                Zero(prod("x{s}", "x{t}")),
                Eq(Max(2), x("x{s}") * m),
                Eq(Max(2), x("x{t}") * m),
            ),
            ("s", "t"),
        ),
        ConditionSet(
            "useful",
            "m^2 = bm + x{s}a, bm = x{t}b, ann(x{s}) ∩ m^2 ⊆ bm, x{t}^2 in ann(b)m",
            (
                Eq(Max(2), Param("b") * m + x("x{s}") * Param("a")),
                Eq(Param("b") * m, x("x{t}") * Param("b")),
                Sub(Ann(x("x{s}")) & Max(2), Param("b") * m),
                Sub(Elems(prod("x{t}", "x{t}")), Ann(Param("b")) * m),
            ),
            ("s", "t", "a", "b"),
        ),
        ConditionSet(
            "nonA-use",
            "m^2 = x{t}m + (x{s}^2), x{t}^2 = 0 = x{s}x{t}, R not Artinian",
            (
                Eq(Max(2), x("x{t}") * m + Elems(prod("x{s}", "x{s}"))),
                Zero(prod("x{t}", "x{t}")),
                Zero(prod("x{s}", "x{t}")),
                Holds("R is not Artinian", lambda ctx: not ctx.algebra.is_artinian()),
            ),
            ("s", "t"),
        ),
        ConditionSet(
            "newp",
            "m^2 = x{s}m, x{s}x{t} = 0, ann(x{s}) ∩ m^2 ⊆ x{t}m, xim ⊆ x{t}m for i != s",
            (
                Eq(Max(2), x("x{s}") * m),
                Zero(prod("x{s}", "x{t}")),
                Sub(Ann(x("x{s}")) & Max(2), x("x{t}") * m),
                ForAll("i", _others("s"), (Sub(x("x{i}") * m, x("x{t}") * m),)),
            ),
            ("s", "t"),
        ),
        ConditionSet(
            "special-case",
            "x1^2 = x1x2 = x2^2 - x1x3 = x2x3 = 0 and xim = 0 for i >= 4",
            (
                Zero(prod("x1", "x1")),
                Zero(prod("x1", "x2")),
                Zero(diff(prod("x2", "x2"), prod("x1", "x3"))),
                Zero(prod("x2", "x3")),
                ForAll("i", lambda ctx: range(4, ctx.e + 1), (Vanishes(x("x{i}") * m),)),
            ),
        ),
        ConditionSet(
            "last-one",
            "e = 4 and x1^2 = x1x4 = x1x2 = x2x4 = x2x3 = x2^2 - x3x4 = x4^2 - x1x3 = 0",
            (
                Holds("e = 4", lambda ctx: ctx.e == 4),
                Zero(prod("x1", "x1")),
                Zero(prod("x1", "x4")),
                Zero(prod("x1", "x2")),
                Zero(prod("x2", "x4")),
                Zero(prod("x2", "x3")),
                Zero(diff(prod("x2", "x2"), prod("x3", "x4"))),
                Zero(diff(prod("x4", "x4"), prod("x1", "x3"))),
            ),
        ),
    ]
    return {s.case_id: s for s in sets}


CONDITION_SETS: Dict[str, ConditionSet] = _build_condition_sets()

ARTINIAN_CASES = ("1", "2", "3", "4", "5", "6", "7", "8")


# ============================================================================
# Entry point
# ============================================================================


@dataclass
class ConditionResult:
    case_id: str
    holds: bool
    failing_clause: Optional[str]
    params: Dict[str, Any]
    depth: int


def coordinate_forms(
    algebra: GradedAlgebra, assignment: Optional[Mapping[str, LinearForm]] = None
) -> List[LinearForm]:
    """x1..xe: the presentation variables, overridden by ``assignment``."""
    f = algebra.field
    n = algebra.nvars
    coords = [LinearForm.variable(f, n, k) for k in range(n)]
    for name, form in (assignment or {}).items():
        i = int(name.lstrip("x"))
        if not 1 <= i <= n:
            raise UnknownCaseError(f"Assignment names {name} but e={n}")
        coords[i - 1] = form
    return coords


def condition_check(
    algebra: GradedAlgebra,
    case_id: str,
    assignment: Optional[Mapping[str, LinearForm]] = None,
    params: Optional[Mapping[str, Any]] = None,
    depth: Optional[int] = None,
    bounds: Tuple[int, int] = (6, 8),
) -> ConditionResult:
    """Evaluate a named condition set in the coordinates given by ``assignment``.

    Args:
        algebra: R built to internal degree J >= 3
        case_id: key of CONDITION_SETS ("1".."8", "4.2(a)", "newp", ...)
        assignment: forms for x1..xe; unnamed coordinates stay the variables
        params: index parameters (s, t, u) and ideal parameters (a, b) of the set
        depth: top degree of the ideal comparisons, default min(3, J - 1)

    Raises:
        UnknownCaseError: unknown case id or missing parameters
    """
    cond = CONDITION_SETS.get(case_id)
    if cond is None:
        raise UnknownCaseError(
            f"Unknown case id {case_id!r}",
            hint=f"Known cases: {', '.join(CONDITION_SETS)}",
        )
    given = dict(params or {})
    missing = [p for p in cond.params if p not in given]
    if missing:
        raise UnknownCaseError(f"Case {case_id} needs parameters {', '.join(missing)}")
    top = min(3, algebra.truncation - 1) if depth is None else depth
    coords = coordinate_forms(algebra, assignment)
    ctx = ConditionContext(algebra, coords, given, top, bounds)

    f = algebra.field
    if coords and rank(f, [c.vector(f) for c in coords]) < len(coords):
        return ConditionResult(case_id, False, "x1..xe is not a basis of R_1", given, top)
    failed = run_clauses(cond.clauses, ctx)
    logger.debug(f"condition {case_id}: {'holds' if failed is None else 'fails at ' + failed}")
    return ConditionResult(case_id, failed is None, failed, dict(ctx.params), top)
