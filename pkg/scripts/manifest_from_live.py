#!/usr/bin/env python3
"""Build an evaluation manifest from a LIVE (release 2) database tree.

Expected layout::

    <root>/refimgs/*.bmp
    <root>/{jp2k,jpeg,wn,gblur,fastfading}/imgN.bmp
    <root>/dmos.mat            (dmos, orgs)
    <root>/refnames_all.mat    (refnames_all)

Rows whose ``orgs`` flag marks the undistorted original are excluded, the
usual convention for this database. Usage::

    python scripts/manifest_from_live.py <root> --out live.csv
"""

import argparse
from pathlib import Path

from scipy.io import loadmat

HEADER = "ref_path,test_path,subjective,subjective_kind,distortion,database"
FOLDERS = [("jp2k", 227), ("jpeg", 233), ("wn", 174), ("gblur", 174), ("fastfading", 174)]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("root", type=Path)
    parser.add_argument("--out", type=Path, default=Path("live.csv"))
    parser.add_argument("--database-label", default="live")
    args = parser.parse_args()

    dmos = loadmat(args.root / "dmos.mat")
    scores = dmos["dmos"].ravel()
    orgs = dmos["orgs"].ravel()
    refnames = [str(cell[0]) for cell in loadmat(args.root / "refnames_all.mat")["refnames_all"].ravel()]

    rows = []
    index = 0
    for folder, count in FOLDERS:
        for i in range(1, count + 1):
            if not orgs[index]:
                ref = args.root / "refimgs" / refnames[index]
                test = args.root / folder / f"img{i}.bmp"
                rows.append(f"{ref},{test},{scores[index]},DMOS,{folder},{args.database_label}")
            index += 1
    if index != len(scores):
        raise SystemExit(f"expected {len(scores)} entries, walked {index}; wrong database layout?")

    args.out.write_text(HEADER + "\n" + "\n".join(rows) + "\n")
    print(f"wrote {len(rows)} rows to {args.out}")


if __name__ == "__main__":
    main()
