"""Analysis tool: Hilbert series, Betti table, Koszul and Golod-ring tests."""

import json
from typing import Any, Dict, Tuple

from ..algebra.graded import QuadraticPresentation, build_algebra
from ..core.parsing import load_presentation
from ..models.enums import ResponseFormat
from ..models.inputs import AnalyzeInput, Bounds, _ToolInput
from ..resolutions.golod import golod_ring_test
from ..resolutions.koszul_test import koszul_test, nu_power_check
from ..resolutions.resolution import minimal_resolution_of_k
from ..utils.errors import _handle_engine_error
from ..utils.formatting import _truncate_response, betti_markdown, routes_markdown, verdict_mark


def load_input(params: _ToolInput) -> Tuple[QuadraticPresentation, Bounds]:
    """Presentation from ``params.path``; a ``truncation:`` line applies unless bounds were given."""
    pres = load_presentation(params.path, params.field)
    bounds = params.bounds
    if "bounds" not in params.model_fields_set and pres.truncation is not None:
        bounds = Bounds(hom=bounds.hom, internal=pres.truncation)
    return pres, bounds


def koszul_golod_analyze(params: AnalyzeInput) -> str:
    """
    Hilbert series, Betti table of k and the Koszul verdict of a quadratic algebra.

    Args:
        params (AnalyzeInput): Validated input parameters containing:
            - path (str): presentation file
            - field (Optional[str]): field override
            - bounds (Bounds): truncation bounds (N, J)
            - nu_route, golod (bool): optional routes
            - powers (List[int]): exponents n for ν^R(m^n)
            - response_format (ResponseFormat): markdown or json

    Returns:
        str: Report in the requested format, or an error message
    """
    try:
        pres, bounds = load_input(params)
        N, J = bounds.hom, bounds.internal
        algebra = build_algebra(pres, J)
        res = minimal_resolution_of_k(algebra, N, J)
        koszul = koszul_test(algebra, N, J, resolution=res, nu_route=params.nu_route)
        golod = golod_ring_test(algebra, N, J, resolution=res) if params.golod else None
        powers = nu_power_check(algebra, params.powers, N, J, resolution=res) if params.powers else None

        if params.response_format == ResponseFormat.JSON:
            data: Dict[str, Any] = {
                "presentation": algebra.describe(),
                "bounds": bounds.model_dump(),
                "hilbert": {
                    "series": algebra.hilbert.format(),
                    "coefficients": algebra.hilbert.coefficients(J),
                    "is_artinian": algebra.is_artinian(),
                },
                "koszul": koszul.model_dump(mode="json"),
            }
            if golod is not None:
                data["golod"] = golod.model_dump(mode="json")
            if powers is not None:
                data["nu_powers"] = powers.model_dump(mode="json")
            return _truncate_response(json.dumps(data, indent=2))

        markdown = f"""# {algebra.describe()}

**Bounds:** N = {N}, J = {J}
**Hilbert series:** {algebra.hilbert.format()}
**h:** {", ".join(str(h) for h in algebra.hilbert.coefficients(J))}

## Koszul test
**Verdict:** {koszul.summary}

{routes_markdown(koszul.routes)}

{betti_markdown(koszul.betti)}
"""
        if golod is not None:
            markdown += f"""
## Golod-ring test
- **Koszul Golod ring (ν(mK) = 0):** {verdict_mark(golod.koszul_golod)}
- **Golod ring (Serre equality):** {verdict_mark(golod.golod)}
- **Routes consistent:** {verdict_mark(golod.consistent)}

{routes_markdown([golod.nu_route, golod.serre_route])}
"""
        if powers is not None:
            markdown += "\n## ν^R(m^n)\n"
            for entry in powers.entries:
                where = "" if entry.vanishes else f" (nonzero at {entry.witness_bidegree}: {entry.witness})"
                markdown += f"- n = {entry.n}: {'zero' if entry.vanishes else 'nonzero'}{where}\n"
            markdown += f"- regularity: {powers.regularity if powers.regularity is not None else 'not reached'}\n"
        return _truncate_response(markdown)
    except Exception as e:
        return _handle_engine_error(e)
