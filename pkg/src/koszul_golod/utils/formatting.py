"""Response formatting: truncation and markdown pieces shared by the tools."""

import json
from typing import List, Optional, Sequence

from .. import config
from ..models.reports import BettiTable, RouteResult

# Character limit for responses
CHARACTER_LIMIT = config.CHARACTER_LIMIT


def _truncate_response(response: str, data_count: Optional[int] = None) -> str:
    """
    Truncate response if it exceeds CHARACTER_LIMIT.

    Args:
        response: The response string to check
        data_count: Optional count of items in the response

    Returns:
        Original or truncated response with notice
    """
    if len(response) <= CHARACTER_LIMIT:
        return response

    # JSON gets a structured warning; a cut JSON document would not parse.
    stripped = response.lstrip()
    if stripped.startswith("{") or stripped.startswith("["):
        warning = {
            "error": True,
            "message": "Response truncated due to size. Lower the bounds or write the report with --json.",
            "truncated": True,
            "character_limit": CHARACTER_LIMIT,
        }
        if data_count is not None:
            warning["data_count"] = data_count
        return json.dumps(warning, indent=2)

    truncated = response[:CHARACTER_LIMIT]
    notice = f"\n\n[Response truncated at {CHARACTER_LIMIT} characters"
    if data_count:
        notice += f" - showing part of {data_count} rows"
    return truncated + notice + "]"


def verdict_mark(verdict: Optional[bool]) -> str:
    if verdict is None:
        return "not run"
    return "yes" if verdict else "no"


def betti_markdown(table: BettiTable) -> str:
    """Markdown table with one row per homological degree i."""
    header = "| i \\ j | " + " | ".join(str(j) for j in range(table.internal + 1)) + " |"
    rule = "|---" * (table.internal + 2) + "|"
    lines = [f"**{table.label}**" + ("" if table.complete else " (top column may continue)"), "", header, rule]
    for i, row in enumerate(table.rows):
        cells = " | ".join(str(b) if b else "." for b in row)
        lines.append(f"| {i} | {cells} |")
    lines += ["", f"P(z,t) = {table.poincare_text()}"]
    return "\n".join(lines)


def routes_markdown(routes: Sequence[RouteResult]) -> str:
    lines: List[str] = ["| Route | Verdict | Detail |", "|---|---|---|"]
    for route in routes:
        detail = route.detail.replace("|", "\\|")
        lines.append(f"| {route.name} | {verdict_mark(route.verdict)} | {detail} |")
    return "\n".join(lines)
