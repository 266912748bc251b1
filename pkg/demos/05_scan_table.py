"""Scan a class of functions into a CSV store and read off the exponent table."""
import tempfile
from pathlib import Path

from boolmeter.scan import exponent_table, format_table, read_store, scan

with tempfile.TemporaryDirectory() as tmp:
    store = Path(tmp) / "upto3.csv"
    for n in range(4):
        summary = scan(n, "all", store)
    print(summary["records"], "records,", len(summary["chain_violations"]), "violations")

    # running again adds nothing
    print(scan(3, "all", store)["added"])

    recs = read_store(store)
    print(format_table(exponent_table(recs)))
