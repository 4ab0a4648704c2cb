#!/usr/bin/env python3
"""Fetch and filter the ProPublica COMPAS two-year recidivism data.

Writes tests/data/compas.csv, which the acceptance suite's COMPAS criterion
needs. Requires network access; run on a connected machine and commit or copy
the result.

The filter is the standard one for this dataset:
  * days_b_screening_arrest in [-30, 30]
  * is_recid != -1
  * c_charge_degree != 'O'
  * score_text != 'N/A'
  * race restricted to African-American / Caucasian
Kept columns: sex, age, race, juv_fel_count, juv_misd_count, juv_other_count,
priors_count, c_charge_degree, two_year_recid.
"""

import csv
import io
import sys
import urllib.request
from pathlib import Path

URL = ("https://raw.githubusercontent.com/propublica/compas-analysis/"
       "master/compas-scores-two-years.csv")
COLUMNS = [
    "sex", "age", "race", "juv_fel_count", "juv_misd_count",
    "juv_other_count", "priors_count", "c_charge_degree", "two_year_recid",
]


def keep(row: dict) -> bool:
    try:
        days = float(row["days_b_screening_arrest"])
    except (ValueError, KeyError):
        return False
    return (
        -30 <= days <= 30
        and row.get("is_recid") != "-1"
        and row.get("c_charge_degree") != "O"
        and row.get("score_text") != "N/A"
        and row.get("race") in ("African-American", "Caucasian")
    )


def main() -> int:
    out_path = Path(__file__).resolve().parent.parent / "tests" / "data" / "compas.csv"
    print(f"fetching {URL} ...")
    with urllib.request.urlopen(URL) as response:
        text = response.read().decode("utf-8")

    rows = [row for row in csv.DictReader(io.StringIO(text)) if keep(row)]
    if not rows:
        print("no rows survived the filter; upstream format changed?", file=sys.stderr)
        return 1

    out_path.parent.mkdir(parents=True, exist_ok=True)
    with out_path.open("w", newline="") as out:
        writer = csv.writer(out)
        writer.writerow(COLUMNS)
        for row in rows:
            writer.writerow([row[c] for c in COLUMNS])
    print(f"wrote {len(rows)} rows to {out_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
