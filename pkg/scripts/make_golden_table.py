#!/usr/bin/env python3
"""Regenerate the golden rendering of the genus-10 table used by the tests.

The file must stay byte-identical to the stdout of

    hyperell table --g 10 --d-min 15 --d-max 19
"""

from pathlib import Path

from hyperell.cli import render_table, table_record

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden" / "table_g10_d15_19.txt"


def main() -> None:
    text = render_table(table_record(10, 15, 19)) + "\n"
    GOLDEN.write_text(text, encoding="utf-8")
    print(f"wrote {GOLDEN} ({len(text)} bytes)")


if __name__ == "__main__":
    main()
