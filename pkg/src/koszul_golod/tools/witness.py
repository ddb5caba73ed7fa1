"""Witness tool: verify given quadrics, or search for a Golod witness."""

import json

from ..algebra.graded import build_algebra
from ..core.parsing import parse_polynomial
from ..models.enums import ResponseFormat
from ..models.inputs import WitnessInput
from ..models.reports import GolodCertificate, WitnessSearchResult
from ..utils.errors import _handle_engine_error
from ..utils.formatting import _truncate_response, betti_markdown, routes_markdown
from ..witness.certificate import verify_witness
from ..witness.search import witness_search
from .analysis import load_input


def certificate_markdown(cert: GolodCertificate) -> str:
    quadrics = ", ".join(cert.quadrics) or "none (P = Q)"
    return f"""**Status:** {cert.status.value}
**Quadrics (d = {cert.codimension}):** {quadrics}
**Source:** {cert.source.value}{f" ({cert.provenance})" if cert.provenance else ""}
**Bounds:** {cert.bounds.text()}, {cert.serre_compared} coefficients compared

{routes_markdown([cert.nu_route, cert.two_linear_route, cert.serre_route])}

{betti_markdown(cert.tor_table)}
"""


def search_markdown(result: WitnessSearchResult) -> str:
    lines = [
        f"**Budget:** {result.budget}, seed {result.seed}, d <= {result.max_codim}",
        f"**Koszul hint:** {result.koszul_hint}",
        "",
    ]
    if result.certificate is not None:
        lines += ["## Certificate", certificate_markdown(result.certificate)]
    else:
        lines.append("No witness found within the budget.")
    lines += ["", "## Attempts", "| # | Source | Quadrics | Outcome |", "|---|---|---|---|"]
    for a in result.attempts:
        lines.append(f"| {a.index} | {a.source.value} | {', '.join(a.quadrics) or '-'} | {a.outcome} |")
    return "\n".join(lines)


def koszul_golod_witness(params: WitnessInput) -> str:
    """
    Verify a Golod witness P = Q/(f) -> R, or search for one.

    With ``params.quadrics`` the given quadrics are verified; otherwise the
    ladder of candidates (relation subsets, then seeded random combinations)
    is walked until a certificate is accepted or the budget runs out.

    Args:
        params (WitnessInput): Validated input parameters containing:
            - path (str): presentation file
            - bounds (Bounds): truncation bounds (N, J)
            - max_codim (int): largest d tried
            - seed (int), budget (int): search controls
            - quadrics (Optional[List[str]]): explicit candidate
            - response_format (ResponseFormat): markdown or json

    Returns:
        str: Certificate or search result in the requested format, or an error message
    """
    try:
        pres, bounds = load_input(params)
        N, J = bounds.hom, bounds.internal
        algebra = build_algebra(pres, J)

        if params.quadrics is not None:
            quadrics = [parse_polynomial(q, pres.names, pres.field) for q in params.quadrics]
            cert = verify_witness(algebra, quadrics, N, J, seed=params.seed)
            if params.response_format == ResponseFormat.JSON:
                return _truncate_response(json.dumps(cert.model_dump(mode="json"), indent=2))
            return _truncate_response(f"# Witness for {algebra.describe()}\n\n{certificate_markdown(cert)}")

        result = witness_search(
            algebra,
            max_codim=params.max_codim,
            budget=params.budget,
            seed=params.seed,
            hom_bound=N,
            internal_bound=J,
        )
        if params.response_format == ResponseFormat.JSON:
            return _truncate_response(json.dumps(result.model_dump(mode="json"), indent=2), len(result.attempts))
        return _truncate_response(
            f"# Witness search for {algebra.describe()}\n\n{search_markdown(result)}", len(result.attempts)
        )
    except Exception as e:
        return _handle_engine_error(e)
