"""Deterministic serialisation of suite reports."""
from __future__ import annotations

from collections import Counter

from ..io import dump_json

FORMATS = ("jsonl", "summary")


def emit_report(reports, format: str = "jsonl", timings: bool = False) -> bytes:
    """Render reports as JSON lines or as a per-suite pass/fail/skip table.

    Output depends only on the reports (elapsed times are left out unless
    ``timings`` is set), so identical runs give identical bytes.
    """
    reports = sorted(reports, key=lambda r: r.sort_key())
    if format == "jsonl":
        return "".join(dump_json(r.to_record(timings)) + "\n" for r in reports).encode()
    if format != "summary":
        raise ValueError(f"unknown format {format!r}")

    counts: dict[str, Counter] = {}
    for r in reports:
        counts.setdefault(r.suite_id, Counter())[r.status] += 1
    width = max([len("suite")] + [len(s) for s in counts])
    lines = [f"{'suite':<{width}}  {'pass':>6} {'fail':>6} {'skip':>6}"]
    total = Counter()
    for sid in sorted(counts):
        c = counts[sid]
        total.update(c)
        lines.append(f"{sid:<{width}}  {c['pass']:>6} {c['fail']:>6} {c['skipped']:>6}")
    lines.append(f"{'total':<{width}}  {total['pass']:>6} {total['fail']:>6} {total['skipped']:>6}")
    return ("\n".join(lines) + "\n").encode()


def exit_code(reports) -> int:
    """0 when nothing failed, else 1."""
    return 1 if any(r.status == "fail" for r in reports) else 0
