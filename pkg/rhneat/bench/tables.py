"""
Summary table emission (CSV and markdown).
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import astuple
from pathlib import Path

import pandas as pd

from ..exceptions import ConfigurationError
from .stats import SUMMARY_COLUMNS, SummaryRow

logger = logging.getLogger(__name__)

TABLE_FILES = {"csv": "summary.csv", "markdown": "summary.md"}


def rows_to_frame(rows: Sequence[SummaryRow]) -> pd.DataFrame:
    return pd.DataFrame([astuple(r) for r in rows], columns=SUMMARY_COLUMNS)


def to_csv(rows: Sequence[SummaryRow]) -> str:
    # floats are written with repr precision so parsing them back is lossless
    return rows_to_frame(rows).to_csv(index=False, lineterminator="\n")


def read_summary_csv(path: Path | str) -> list[SummaryRow]:
    df = pd.read_csv(
        path, dtype={"agent": str, "game": str}, keep_default_na=False, float_precision="round_trip"
    )
    return [
        SummaryRow(
            agent=r["agent"],
            game=r["game"],
            n=int(r["n"]),
            win_rate=float(r["win_rate"]),
            win_se=float(r["win_se"]),
            mean_score=float(r["mean_score"]),
            score_se=float(r["score_se"]),
        )
        for r in df.to_dict("records")
    ]


def to_markdown(rows: Sequence[SummaryRow]) -> str:
    lines = [
        "| " + " | ".join(SUMMARY_COLUMNS) + " |",
        "|" + "|".join("---" if c in ("agent", "game") else "---:" for c in SUMMARY_COLUMNS) + "|",
    ]
    for r in rows:
        cells = [
            r.agent,
            r.game,
            str(r.n),
            f"{r.win_rate:.4f}",
            f"{r.win_se:.4f}",
            f"{r.mean_score:.4f}",
            f"{r.score_se:.4f}",
        ]
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def emit_tables(
    rows: Sequence[SummaryRow],
    out_dir: Path | str,
    formats: Iterable[str] = ("csv", "markdown"),
) -> dict[str, Path]:
    """Write the summary in each format; returns the written paths by format."""
    if not rows:
        raise ConfigurationError("No summary rows to emit")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: dict[str, Path] = {}
    for fmt in formats:
        if fmt not in TABLE_FILES:
            raise ConfigurationError(f"Unknown table format {fmt!r}", details={"known": list(TABLE_FILES)})
        path = out / TABLE_FILES[fmt]
        path.write_text(to_csv(rows) if fmt == "csv" else to_markdown(rows))
        written[fmt] = path
        logger.info(f"Wrote {fmt} summary to {path}")
    return written
