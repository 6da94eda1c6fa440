#!/usr/bin/env python3
"""Pairwise two-sided extension table for connected endomorphism-extension
class members.

Enumerates all connected members on up to --max-n vertices, decides the
two-sided extension relation for every unordered pair twice (structural
ladder and brute-force search), prints the matrix, and exits 1 if the two
methods ever disagree.

Usage: python scripts/pair_symmetry_table.py [--max-n 6]
"""

from __future__ import annotations

import argparse
import itertools
import sys

from homhom.families import enumerate_graphs
from homhom.graphs import canonical_form, to_graph6
from homhom.oracle import extension_symmetric, query_for_code
from homhom.recognizers import chh_symmetric, is_chh_connected


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=6)
    args = parser.parse_args()

    members = sorted(
        (g for g in enumerate_graphs(args.max_n) if is_chh_connected(g) is not None),
        key=lambda g: (g.n, canonical_form(g)),
    )
    names = [to_graph6(g) for g in members]
    print(f"{len(members)} connected members on <= {args.max_n} vertices")

    query = query_for_code("homo-homo")
    table: dict[tuple[int, int], bool] = {}
    disagreements = 0
    for i, j in itertools.combinations_with_replacement(range(len(members)), 2):
        ladder = chh_symmetric(members[i], members[j])
        oracle = extension_symmetric(members[i], members[j], query).holds
        if ladder != oracle:
            disagreements += 1
            print(f"DISAGREE {names[i]} {names[j]}: ladder={ladder} oracle={oracle}")
        table[i, j] = table[j, i] = oracle

    width = max(len(s) for s in names)
    print(" " * width, *(s.rjust(width) for s in names))
    for i, row_name in enumerate(names):
        cells = (("+" if table[i, j] else ".").rjust(width) for j in range(len(names)))
        print(row_name.rjust(width), *cells)

    print(f"{disagreements} disagreements")
    return 1 if disagreements else 0


if __name__ == "__main__":
    sys.exit(main())
