#!/usr/bin/env python3
"""Writes data/frequency.tsv (word, rank) from the wordfreq English list."""
import argparse
import sys

from wordfreq import top_n_list

ap = argparse.ArgumentParser()
ap.add_argument("--size", type=int, default=5000)
ap.add_argument("--out", default="data/frequency.tsv")
args = ap.parse_args()

words = [w for w in top_n_list("en", args.size * 2) if w.isascii() and w.isalpha()][: args.size]
with open(args.out, "w") as f:
    f.write("# English word frequency ranks (wordfreq top_n_list, alphabetic words only)\n")
    for rank, w in enumerate(words, 1):
        f.write(f"{w}\t{rank}\n")
print(f"{len(words)} words -> {args.out}", file=sys.stderr)
