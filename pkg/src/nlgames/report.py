"""CSV / JSON / markdown output for scan results."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from nlgames.quantum import format_angle
from nlgames.reference import REFERENCE_OUTCOMES, matches
from nlgames.scan import SEPARATION_EPS, AdvantageRow, PartitionSummary, ScanRecord

RECORD_COLUMNS = (
    "mask_hex",
    "partition",
    "classical",
    "family_max",
    "reported_quantum",
    "separation",
    "inconsistent",
)
FORMATS = ("csv", "json", "markdown")


class ReportError(Exception):
    pass


def _prob(p: Fraction | float) -> str:
    return repr(float(p))


def _real(v: float) -> str:
    return f"{v:.12f}"


def _sep(v: float, digits: int = 6) -> str:
    return f"{v:.{digits}f}" if v > SEPARATION_EPS else "NA"


def record_row(r: ScanRecord) -> dict[str, Any]:
    return {
        "mask_hex": r.mask.hex,
        "partition": str(r.partition),
        "classical": float(r.classical),
        "family_max": r.family,
        "reported_quantum": r.reported_quantum,
        "separation": r.separation,
        "inconsistent": r.inconsistent,
    }


def summary_row(s: PartitionSummary) -> dict[str, Any]:
    return {
        "partition": str(s.partition),
        "total": s.partition.total,
        "game_count": s.game_count,
        "outcome_pairs": [[float(c), q] for c, q in s.outcome_pairs],
        "max_separation": s.max_separation,
        "witness_mask": s.witness_mask.hex if s.witness_mask is not None else None,
    }


def advantage_row(a: AdvantageRow) -> dict[str, Any]:
    return {
        "total": a.partition.total,
        "partition": str(a.partition),
        "mask_hex": a.witness.hex,
        "anf": a.anf,
        "classical": float(a.classical),
        "classical_strategy": str(a.strategy),
        "family_max": a.family,
        "angles": {
            "theta0": format_angle(a.angles.theta0),
            "theta1": format_angle(a.angles.theta1),
            "psi0": format_angle(a.angles.psi0),
            "psi1": format_angle(a.angles.psi1),
        },
        "separation": a.separation,
    }


def _kind(items: Sequence[Any]) -> str:
    first = items[0]
    if isinstance(first, ScanRecord):
        return "records"
    if isinstance(first, PartitionSummary):
        return "summaries"
    if isinstance(first, AdvantageRow):
        return "advantage"
    raise TypeError(f"cannot emit items of type {type(first).__name__}")


_ROW_FN = {"records": record_row, "summaries": summary_row, "advantage": advantage_row}


def _csv_cell(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return _real(v)
    if isinstance(v, (list, dict)):
        return json.dumps(v, sort_keys=True)
    return "" if v is None else str(v)


def render(items: Sequence[Any], fmt: str) -> str:
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; choose one of {', '.join(FORMATS)}")
    if not items:
        raise ValueError("nothing to emit: empty input")
    kind = _kind(items)
    rows = [_ROW_FN[kind](it) for it in items]
    if fmt == "json":
        return json.dumps(rows, indent=1) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(rows[0].keys())
        for row in rows:
            w.writerow(_csv_cell(v) for v in row.values())
        return buf.getvalue()
    if kind == "summaries":
        return render_partition_tables(items)
    if kind == "advantage":
        return render_advantage_table(items)
    header = list(rows[0].keys())
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(_csv_cell(v) for v in row.values()) + " |" for row in rows]
    return "\n".join(lines) + "\n"


def emit(items: Sequence[Any], fmt: str, destination: str | Path) -> None:
    text = render(items, fmt)
    write_text(destination, text)


def write_text(destination: str | Path, text: str) -> None:
    path = Path(destination)
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise ReportError(f"cannot write {path}: {exc.strerror or exc}") from exc


# --- markdown --------------------------------------------------------------


def render_partition_tables(summaries: Sequence[PartitionSummary]) -> str:
    """One table per winner total, rows per (classical, quantum) pair."""
    out: list[str] = []
    totals = sorted({s.partition.total for s in summaries}, reverse=True)
    for total in totals:
        out.append(f"### Partitions with {total} winning outcomes\n")
        out.append("| Partition | Games | Max. classical success prob. | Max. quantum success prob. | Corresponding separation |")
        out.append("|---|---|---|---|---|")
        for s in (s for s in summaries if s.partition.total == total):
            for i, (c, q) in enumerate(s.outcome_pairs):
                sep = q - float(c)
                label = str(s.partition) if i == 0 else ""
                count = str(s.game_count) if i == 0 else ""
                out.append(f"| {label} | {count} | {_prob(c)} | {q:.6f} | {_sep(sep)} |")
        out.append("")
    return "\n".join(out)


def render_advantage_table(rows: Sequence[AdvantageRow]) -> str:
    out = [
        "| Winners | Partition | Game (ANF) | Mask | Max. classical | Classical strategy | Max. quantum | Angles (theta0, theta1, psi0, psi1) | Separation |",
        "|---|---|---|---|---|---|---|---|---|",
    ]
    for a in rows:
        out.append(
            f"| {a.partition.total} | {a.partition} | {a.anf} | {a.witness.hex} | {_prob(a.classical)} | "
            f"{a.strategy} | {a.family:.6f} | {a.angles} | {a.separation:.6f} |"
        )
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class Discrepancy:
    partition: str
    classical: Fraction
    quantum: float
    note: str


def find_discrepancies(summaries: Sequence[PartitionSummary]) -> list[Discrepancy]:
    """Scan outcomes with no matching reference row, and reference rows never seen."""
    found = []
    for s in summaries:
        ref = REFERENCE_OUTCOMES.get(s.partition)
        if ref is None:
            if s.partition.admissible and s.partition.total <= 11:
                for c, q in s.outcome_pairs:
                    found.append(Discrepancy(str(s.partition), c, q, "partition has no reference rows"))
            continue
        for c, q in s.outcome_pairs:
            if not any(matches((rc, rq), (c, q)) for rc, rq, _ in ref):
                found.append(Discrepancy(str(s.partition), c, q, "found by scan, not in reference rows"))
        for rc, rq, _ in ref:
            if not any(matches((rc, rq), pair) for pair in s.outcome_pairs):
                found.append(Discrepancy(str(s.partition), rc, rq, "reference row not found by scan"))
    return found


def render_summary(summaries: Sequence[PartitionSummary], advantage: Sequence[AdvantageRow]) -> str:
    parts = [
        "# Nonlocal game census\n",
        f"Partitions: {len(summaries)}; games: {sum(s.game_count for s in summaries)}.",
        "Partitions are ordered by total winners (descending), then by counts.\n",
        "## Partition outcomes\n",
        render_partition_tables(summaries),
        "## Partitions with quantum advantage\n",
        render_advantage_table(advantage) if advantage else "None.\n",
        "## Discrepancies\n",
    ]
    disc = find_discrepancies(summaries)
    if disc:
        parts.append("| Partition | Classical | Quantum | Note |")
        parts.append("|---|---|---|---|")
        parts += [f"| {d.partition} | {_prob(d.classical)} | {d.quantum:.6f} | {d.note} |" for d in disc]
        parts.append("")
    else:
        parts.append("None.\n")
    return "\n".join(parts)
