#!/usr/bin/env python3
"""Build an evaluation manifest from a TID2008 database tree.

Expected layout::

    <root>/reference_images/I01.BMP .. I25.BMP
    <root>/distorted_images/iXX_YY_Z.bmp
    <root>/mos_with_names.txt   (lines: "<mos> <filename>")

TID2008 publishes MOS values (higher is better), so rows are tagged MOS.
Usage::

    python scripts/manifest_from_tid2008.py <root> --out tid2008.csv
"""

import argparse
from pathlib import Path

HEADER = "ref_path,test_path,subjective,subjective_kind,distortion,database"

DISTORTIONS = {
    1: "awgn", 2: "awgn-color", 3: "spatial-corr-noise", 4: "masked-noise",
    5: "high-freq-noise", 6: "impulse-noise", 7: "quantization-noise", 8: "gblur",
    9: "denoising", 10: "jpeg", 11: "jp2k", 12: "jpeg-trans-error",
    13: "jp2k-trans-error", 14: "pattern-noise", 15: "block-distortion",
    16: "intensity-shift", 17: "contrast",
}


def find_case_insensitive(directory, name):
    exact = directory / name
    if exact.exists():
        return exact
    lowered = name.lower()
    for candidate in directory.iterdir():
        if candidate.name.lower() == lowered:
            return candidate
    raise SystemExit(f"cannot find {name} under {directory}")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("root", type=Path)
    parser.add_argument("--out", type=Path, default=Path("tid2008.csv"))
    parser.add_argument("--database-label", default="tid2008")
    args = parser.parse_args()

    refs = args.root / "reference_images"
    dists = args.root / "distorted_images"
    rows = []
    for line in (args.root / "mos_with_names.txt").read_text().splitlines():
        if not line.strip():
            continue
        mos, name = line.split()
        stem = Path(name).stem  # iXX_YY_Z
        ref_num, dist_num, _ = stem.split("_")
        ref = find_case_insensitive(refs, f"I{ref_num[1:]}.BMP")
        test = find_case_insensitive(dists, name)
        label = DISTORTIONS[int(dist_num)]
        rows.append(f"{ref},{test},{mos},MOS,{label},{args.database_label}")

    args.out.write_text(HEADER + "\n" + "\n".join(rows) + "\n")
    print(f"wrote {len(rows)} rows to {args.out}")


if __name__ == "__main__":
    main()
