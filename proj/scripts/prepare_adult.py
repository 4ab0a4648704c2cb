#!/usr/bin/env python3
"""Fetch and clean the UCI Adult (census income) training split.

Writes tests/data/adult.csv, which enables the acceptance suite's optional
Adult spot checks. Requires network access; run on a connected machine and
commit or copy the result.

Cleaning: drop fnlwgt and education-num, drop rows with missing fields, strip
whitespace, normalize the label to {<=50K, >50K}.
"""

import csv
import sys
import urllib.request
from pathlib import Path

URL = "https://archive.ics.uci.edu/ml/machine-learning-databases/adult/adult.data"
RAW_COLUMNS = [
    "age", "workclass", "fnlwgt", "education", "education-num",
    "marital-status", "occupation", "relationship", "race", "sex",
    "capital-gain", "capital-loss", "hours-per-week", "native-country",
    "income",
]
DROP = {"fnlwgt", "education-num"}


def main() -> int:
    out_path = Path(__file__).resolve().parent.parent / "tests" / "data" / "adult.csv"
    print(f"fetching {URL} ...")
    with urllib.request.urlopen(URL) as response:
        text = response.read().decode("utf-8")

    kept_columns = [c for c in RAW_COLUMNS if c not in DROP]
    rows = []
    for line in text.splitlines():
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != len(RAW_COLUMNS) or "?" in parts:
            continue
        record = dict(zip(RAW_COLUMNS, parts))
        record["income"] = record["income"].rstrip(".")
        rows.append([record[c] for c in kept_columns])
    if not rows:
        print("no usable rows; upstream format changed?", file=sys.stderr)
        return 1

    out_path.parent.mkdir(parents=True, exist_ok=True)
    with out_path.open("w", newline="") as out:
        writer = csv.writer(out)
        writer.writerow(kept_columns)
        writer.writerows(rows)
    print(f"wrote {len(rows)} rows to {out_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
