#!/usr/bin/env python3
"""Print the named verification tables to stdout.

Usage: python3 scripts/print_tables.py [trisequence|apocrypha|guylines ...]
Defaults to all three.
"""

import sys

from quadgeo.cli_figures import table_text

NAMES = ("trisequence", "apocrypha", "guylines")


def main() -> None:
    names = sys.argv[1:] or NAMES
    for name in names:
        print(f"== {name} ==")
        print(table_text(name))
        print()


if __name__ == "__main__":
    main()
