"""Parsing of polynomial text, field names and presentation files.

Polynomial text goes through sympy's ``parse_expr`` (``^`` is read as a
power) and ``sp.Poly`` over QQ; coefficients are then mapped into the
target field. Over F_{p^k} the symbol ``a`` denotes the field generator
unless it is declared as a variable.
"""

import logging
import re
from fractions import Fraction
from pathlib import Path
from tokenize import TokenError
from typing import TYPE_CHECKING, List, Optional, Sequence, Tuple, Union

import sympy as sp
from sympy.polys.polyerrors import CoercionFailed, PolynomialError
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)

from ..utils.errors import FieldError, ParseError
from .field import ExtensionField, Field, make_field
from .polynomial import Polynomial

if TYPE_CHECKING:
    from ..algebra.graded import QuadraticPresentation

logger = logging.getLogger(__name__)

_TRANSFORMATIONS = standard_transformations + (convert_xor,)
_IDENTIFIER = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_ALLOWED_TEXT = re.compile(r"^[0-9A-Za-z_+\-*/^()\s]*$")
_WORD = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_FIELD_PATTERNS = [
    (re.compile(r"^(?:QQ|Q)$", re.IGNORECASE), None),
    (re.compile(r"^(?:GF|F)\(?\s*(\d+)\s*\)?$", re.IGNORECASE), "prime"),
    (re.compile(r"^(?:GF|F)\(\s*(\d+)\s*\)\s*\^\s*(\d+)$", re.IGNORECASE), "power"),
    (re.compile(r"^(?:GF|F)\(\s*(\d+)\s*\^\s*(\d+)\s*\)$", re.IGNORECASE), "power"),
]
GENERATOR_SYMBOL = "a"


def parse_field_text(text: str) -> Tuple[int, int]:
    """Read 'QQ', 'GF(p)', 'GF(p)^k' or 'GF(p^k)' as (characteristic, extension degree)."""
    cleaned = text.strip()
    for pattern, kind in _FIELD_PATTERNS:
        match = pattern.match(cleaned)
        if not match:
            continue
        if kind is None:
            return 0, 1
        if kind == "prime":
            return int(match.group(1)), 1
        return int(match.group(1)), int(match.group(2))
    raise FieldError(f"Cannot read field specification {text!r}")


def field_from_text(text: str) -> Field:
    characteristic, degree = parse_field_text(text)
    return make_field(characteristic, degree)


def validate_names(names: Sequence[str]) -> List[str]:
    out = []
    for raw in names:
        name = raw.strip()
        if not _IDENTIFIER.match(name):
            raise ParseError(f"Variable name {name!r} is not an ASCII identifier")
        if name in out:
            raise ParseError(f"Variable {name!r} declared twice")
        out.append(name)
    return out


def _rational(coeff: sp.Expr, text: str) -> Fraction:
    if not coeff.is_Rational:
        raise ParseError(f"Coefficient {coeff} in {text!r} is not an integer or a/b")
    return Fraction(int(coeff.p), int(coeff.q))


def parse_polynomial(text: str, names: Sequence[str], field: Field) -> Polynomial:
    """Parse a signed sum of terms such as ``3/2*x^2 - y*z`` into a Polynomial."""
    names = list(names)
    symbols = [sp.Symbol(n) for n in names]
    local_dict = {n: s for n, s in zip(names, symbols)}
    use_generator = isinstance(field, ExtensionField) and GENERATOR_SYMBOL not in names
    gen_symbol = sp.Symbol(GENERATOR_SYMBOL)
    if use_generator:
        local_dict[GENERATOR_SYMBOL] = gen_symbol

    source = text.strip()
    if not source:
        raise ParseError("Empty polynomial text")
    # parse_expr evaluates its input, so only arithmetic on declared names gets through
    if not _ALLOWED_TEXT.match(source):
        raise ParseError(f"Malformed polynomial {text!r}: only digits, variables, + - * / ^ and parentheses are allowed")
    unknown_words = sorted(set(_WORD.findall(source)) - set(local_dict))
    if unknown_words:
        raise ParseError(f"Unknown variable(s) {', '.join(unknown_words)} in {text!r}")
    try:
        expr = parse_expr(
            source,
            local_dict=local_dict,
            transformations=_TRANSFORMATIONS,
            evaluate=True,
        )
    except (SyntaxError, TypeError, ValueError, AttributeError, NameError, sp.SympifyError, TokenError) as e:
        raise ParseError(f"Malformed polynomial {text!r}: {e}") from e

    if not isinstance(expr, sp.Expr):
        raise ParseError(f"Malformed polynomial {text!r}")
    allowed = set(symbols) | ({gen_symbol} if use_generator else set())
    unknown = sorted(str(s) for s in expr.free_symbols - allowed)
    if unknown:
        raise ParseError(f"Unknown variable(s) {', '.join(unknown)} in {text!r}")

    n = len(names)
    gens = symbols + ([gen_symbol] if use_generator else [])
    if expr == 0:
        return Polynomial.zero(field, n)
    try:
        poly = sp.Poly(expr, *gens, domain=sp.QQ)
    except (PolynomialError, CoercionFailed) as e:
        raise ParseError(f"{text!r} is not a polynomial: {e}") from e

    terms = {}
    for exps, coeff in poly.terms():
        value = field.from_fraction(_rational(coeff, text))
        mono = tuple(int(x) for x in exps[:n])
        if use_generator and exps[n]:
            value = field.mul(value, field.power(field.generator, int(exps[n])))  # type: ignore[attr-defined]
        terms[mono] = field.add(terms.get(mono, field.zero), value)
    return Polynomial(field, n, terms)


def parse_presentation(
    text: str,
    field_override: Optional[Union[str, Field]] = None,
    source: str = "<text>",
) -> "QuadraticPresentation":
    """Read a presentation file body.

    Lines are ``field: ...``, ``vars: x,y,z``, ``rel: <polynomial>`` (repeatable)
    and an optional ``truncation: J``. Blank lines and ``#`` comments are skipped.
    """
    from ..algebra.graded import QuadraticPresentation

    field_text: Optional[str] = None
    names: Optional[List[str]] = None
    rel_texts: List[Tuple[int, str]] = []
    truncation: Optional[int] = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError(f"{source}:{lineno}: expected 'key: value', got {raw.strip()!r}")
        key, value = (part.strip() for part in line.split(":", 1))
        key = key.lower()
        if key == "field":
            field_text = value
        elif key in ("vars", "variables"):
            names = validate_names([v for v in value.split(",") if v.strip()])
        elif key in ("rel", "relation"):
            rel_texts.append((lineno, value))
        elif key == "truncation":
            try:
                truncation = int(value)
            except ValueError as e:
                raise ParseError(f"{source}:{lineno}: truncation must be an integer") from e
        else:
            raise ParseError(f"{source}:{lineno}: unknown key {key!r}")

    if names is None:
        raise ParseError(f"{source}: missing 'vars:' line")
    if isinstance(field_override, Field):
        field = field_override
    elif field_override:
        field = field_from_text(field_override)
    elif field_text:
        field = field_from_text(field_text)
    else:
        raise ParseError(f"{source}: missing 'field:' line")

    relations = []
    for lineno, rel in rel_texts:
        try:
            relations.append(parse_polynomial(rel, names, field))
        except ParseError as e:
            raise ParseError(f"{source}:{lineno}: {e}") from e
    logger.debug(f"Parsed {source}: {len(names)} variables, {len(relations)} relations over {field.name}")
    return QuadraticPresentation(
        field=field,
        names=tuple(names),
        relations=tuple(relations),
        truncation=truncation,
    )


def load_presentation(path: Union[str, Path], field_override: Optional[str] = None) -> "QuadraticPresentation":
    p = Path(path)
    return parse_presentation(p.read_text(encoding="utf-8"), field_override, source=str(p))
