"""Manifest-driven ingestion of benchmark image pairs.

A manifest is a UTF-8 CSV with the exact header

    ref_path,test_path,subjective,subjective_kind,distortion,database

and no field quoting; paths containing commas are rejected rather than
quoted. Relative paths resolve against the manifest's own directory.
"""

from __future__ import annotations

import logging
import math
import os
from dataclasses import dataclass
from pathlib import Path

from .errors import ParseError

HEADER = "ref_path,test_path,subjective,subjective_kind,distortion,database"
SUBJECTIVE_KINDS = ("MOS", "DMOS")

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ManifestEntry:
    ref_path: Path
    test_path: Path
    subjective: float
    subjective_kind: str
    distortion: str
    database: str


def load_manifest(path) -> list[ManifestEntry]:
    """Parse a manifest file into entries, skipping unreadable images.

    Schema violations raise ParseError with the offending line number;
    rows whose image files are missing or unreadable are skipped with a
    logged warning and a final skip count.
    """
    path = Path(path)
    base = path.parent
    with open(path, "r", encoding="utf-8") as handle:
        lines = handle.read().splitlines()
    if not lines or lines[0].strip() != HEADER:
        raise ParseError(f"manifest must start with header '{HEADER}'", line=1)

    entries = []
    skipped = 0
    for lineno, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            continue
        fields = [f.strip() for f in raw.split(",")]
        if len(fields) != 6:
            raise ParseError(f"expected 6 comma-separated fields, got {len(fields)}", line=lineno)
        if any(not f for f in fields):
            raise ParseError("empty field", line=lineno)
        ref_raw, test_raw, subjective_raw, kind, distortion, database = fields
        try:
            subjective = float(subjective_raw)
        except ValueError:
            raise ParseError(f"subjective score '{subjective_raw}' is not a number", line=lineno)
        if not math.isfinite(subjective):
            raise ParseError("subjective score must be finite", line=lineno)
        kind = kind.upper()
        if kind not in SUBJECTIVE_KINDS:
            raise ParseError(f"subjective_kind must be one of {SUBJECTIVE_KINDS}", line=lineno)
        ref_path = _resolve(base, ref_raw)
        test_path = _resolve(base, test_raw)
        unreadable = [p for p in (ref_path, test_path) if not _readable(p)]
        if unreadable:
            skipped += 1
            log.warning("line %d: skipping row, unreadable image %s", lineno, unreadable[0])
            continue
        entries.append(ManifestEntry(ref_path, test_path, subjective, kind, distortion, database))
    if skipped:
        log.warning("skipped %d row(s) with unreadable images", skipped)
    return entries


def _resolve(base: Path, raw: str) -> Path:
    p = Path(raw)
    return p if p.is_absolute() else base / p


def _readable(path: Path) -> bool:
    return path.is_file() and os.access(path, os.R_OK)
