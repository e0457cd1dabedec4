"""Markdown report of a verify run.

One section per suite, one table row per check with the identity it checks,
the number of cases and the status.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, List


def _status(passed: bool) -> str:
    return "PASS" if passed else "**FAIL**"


def _escape(text: str) -> str:
    return text.replace("|", "\\|")


def build_report_text(ctx: Dict[str, Any]) -> str:
    lines: List[str] = []
    lines.append(f"# Verification Report: {ctx.get('suite', 'all')}")
    lines.append("")
    lines.append(f"- Date: {ctx.get('asof', '')}")
    lines.append(f"- Size: {ctx.get('size')}")
    lines.append(f"- Seed: {ctx.get('seed')}")
    lines.append(f"- Random instances per property: {ctx.get('instances')}")
    lines.append("")

    results = ctx.get("results") or []
    failed = [r for r in results if not r.passed]
    lines.append("## Summary")
    lines.append(f"- Verdict: **{'PASS' if not failed else 'FAIL'}**")
    lines.append(f"- Checks passed: {len(results) - len(failed)}/{len(results)}")
    lines.append(f"- Cases run: {sum(r.cases for r in results)}")
    if failed:
        lines.append("- Failed checks: " + ", ".join(f"{r.suite}/{r.name}" for r in failed))
    lines.append("")

    suites: Dict[str, List[Any]] = {}
    for r in results:
        suites.setdefault(r.suite, []).append(r)
    for suite, rows in suites.items():
        lines.append(f"## Suite `{suite}`")
        lines.append("")
        lines.append("| check | identity | cases | seconds | status |")
        lines.append("|---|---|---:|---:|---|")
        for r in rows:
            lines.append(
                f"| {r.name} | {_escape(r.identity)} | {r.cases} | {r.seconds:.2f} | {_status(r.passed)} |"
            )
        lines.append("")
        for r in rows:
            if not r.passed and r.example:
                lines.append(f"- `{r.name}` failed {r.failures} time(s); first case: `{_escape(r.example)}`")
        if any(not r.passed for r in rows):
            lines.append("")

    # Files written alongside the report
    for s in ctx.get("sources", []):
        lines.append(f"- {s}")
    if ctx.get("sources"):
        lines.append("")

    return "\n".join(lines)


def write_report(output_path: Path, context: Dict[str, Any]) -> None:
    text = build_report_text(context)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    output_path.write_text(text, encoding="utf-8")
    print(f"[report] Report saved at: {output_path}")
