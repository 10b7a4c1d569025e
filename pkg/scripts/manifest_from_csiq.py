#!/usr/bin/env python3
"""Build an evaluation manifest from a CSIQ database tree.

Expected layout::

    <root>/src_imgs/<name>.png
    <root>/dst_imgs/<type>/<name>.<TYPE>.<level>.png
    <scores.csv> exported from csiq.DMOS.xlsx (sheet DMOS) with the
    columns image,dst_type,dst_lev,dmos -- export once from a spreadsheet
    tool; the original distribution ships the scores as .xlsx only.

Usage::

    python scripts/manifest_from_csiq.py <root> <scores.csv> --out csiq.csv
"""

import argparse
import csv
from pathlib import Path

HEADER = "ref_path,test_path,subjective,subjective_kind,distortion,database"

# spreadsheet dst_type spelling -> (directory, file token)
TYPE_MAP = {
    "noise": ("awgn", "AWGN"),
    "awgn": ("awgn", "AWGN"),
    "jpeg": ("jpeg", "jpeg"),
    "jpeg 2000": ("jpeg2000", "jpeg2000"),
    "jpeg2000": ("jpeg2000", "jpeg2000"),
    "fnoise": ("fnoise", "fnoise"),
    "blur": ("blur", "BLUR"),
    "contrast": ("contrast", "contrast"),
}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("root", type=Path)
    parser.add_argument("scores", type=Path)
    parser.add_argument("--out", type=Path, default=Path("csiq.csv"))
    parser.add_argument("--database-label", default="csiq")
    args = parser.parse_args()

    rows = []
    with open(args.scores, newline="") as handle:
        for record in csv.DictReader(handle):
            name = record["image"].strip()
            kind = record["dst_type"].strip().lower()
            level = record["dst_lev"].strip()
            folder, token = TYPE_MAP[kind]
            ref = args.root / "src_imgs" / f"{name}.png"
            test = args.root / "dst_imgs" / folder / f"{name}.{token}.{level}.png"
            rows.append(f"{ref},{test},{record['dmos'].strip()},DMOS,{folder},{args.database_label}")

    args.out.write_text(HEADER + "\n" + "\n".join(rows) + "\n")
    print(f"wrote {len(rows)} rows to {args.out}")


if __name__ == "__main__":
    main()
