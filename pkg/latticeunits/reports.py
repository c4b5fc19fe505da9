"""
Module for rendering verdicts and tabular reports
"""

import json
import logging
from pathlib import Path
from typing import Optional

import pandas as pd

from latticeunits.errors import DocumentValidationError
from latticeunits.models import Verdict

logger = logging.getLogger(__name__)


def verdict_frame(verdicts: list[Verdict]) -> pd.DataFrame:
    """
    One row per block verdict

    :param verdicts: verdicts
    :return: dataframe with columns block, p, status, nodes, failing_family
    """
    return pd.DataFrame(
        [
            {
                "block": v.block,
                "p": v.p,
                "status": v.status,
                "nodes": v.nodes,
                "failing_family": v.failing_family,
            }
            for v in verdicts
        ],
        columns=["block", "p", "status", "nodes", "failing_family"],
    )


def witness_frame(verdict: Verdict) -> pd.DataFrame:
    """
    The witness of a SAT verdict, one row per module

    :param verdict: verdict
    :return: dataframe with columns kind, character, j, module
    """
    rows = []
    for key, parts in (verdict.witness or {}).items():
        kind, name, j = key.split("|")
        rows.append(
            {
                "kind": kind,
                "character": name,
                "j": int(j),
                "module": ",".join(str(x) for x in parts) or "0",
            }
        )
    return pd.DataFrame(rows, columns=["kind", "character", "j", "module"])


def format_verdicts(
    verdicts: list[Verdict], output_format: str = "text", emit_witness: bool = True
) -> str:
    """
    Render verdicts as text or as JSON

    :param verdicts: verdicts
    :param output_format: 'text' or 'structured'
    :param emit_witness: whether to include witnesses
    :return: rendered report
    """
    if output_format == "structured":
        exclude = None if emit_witness else {"witness"}
        return json.dumps(
            [v.model_dump(exclude=exclude, exclude_none=True) for v in verdicts],
            indent=2,
        )

    lines = []
    for verdict in verdicts:
        line = (
            f"block {verdict.block} p={verdict.p}: {verdict.status} "
            f"({verdict.nodes} nodes)"
        )
        if not verdict.sat and verdict.failing_family is not None:
            line += f" first failure: {verdict.failing_family}"
        lines.append(line)
        if not verdict.sat and verdict.detail:
            lines.append(f"  {verdict.detail}")
        if verdict.sat and emit_witness:
            frame = witness_frame(verdict)
            if len(frame) > 0:
                lines.append(frame.to_string(index=False))
    overall = "SAT" if all(v.sat for v in verdicts) else "UNSAT"
    lines.append(f"overall: {overall}")
    return "\n".join(lines)


def format_frame(frame: pd.DataFrame, output_format: str = "text") -> str:
    """
    Render a table as text or as JSON records

    :param frame: table
    :param output_format: 'text' or 'structured'
    :return: rendered table
    """
    if output_format == "structured":
        return frame.to_json(orient="records", indent=2, default_handler=str)
    return frame.to_string(index=False)


def save_frame(frame: pd.DataFrame, path: Optional[str]):
    """
    Save a table as CSV if a path is given

    :param frame: table
    :param path: optional csv path
    :return: None
    """
    if path is None:
        return
    save_path = Path(path)
    if not save_path.parent.exists():
        err = f"Parent directory {save_path.parent} does not exist"
        logger.error(err)
        raise DocumentValidationError(err)
    logger.info(f"Saving report to {save_path}")
    frame.to_csv(save_path, index=False)
