#!/usr/bin/env python3
"""Full cross-verification experiment.

Runs the recognizer-vs-oracle sweep over every isomorphism class on up to
six vertices (all six membership classes), then extends to every connected
seven-vertex graph for the endomorphism-extension class.  Writes JSON-lines
records and prints a summary; exits 1 if any disagreement is found.

Usage: python scripts/run_full_sweep.py [--out sweep.jsonl] [--jobs N]
"""

from __future__ import annotations

import argparse
import sys

from homhom.cli import main as cli_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="sweep_results.jsonl")
    parser.add_argument("--jobs", type=int, default=4)
    args = parser.parse_args()

    base = cli_main(
        [
            "sweep",
            "--max-n", "6",
            "--jobs", str(args.jobs),
            "--out", args.out,
        ]
    )
    seven = cli_main(
        [
            "sweep",
            "--max-n", "7",
            "--connected",
            "--classes", "c-hh",
            "--jobs", str(args.jobs),
            "--out", args.out.replace(".jsonl", "_connected7.jsonl"),
        ]
    )
    return max(base, seven)


if __name__ == "__main__":
    sys.exit(main())
