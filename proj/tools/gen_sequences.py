#!/usr/bin/env python3
"""Regenerates data/sequences.json from closed formulas (independent of the path recursion)."""
import json
import sys
from math import comb

COUNT = 32


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def fine(count):
    # C_n = 2 F_n + F_{n-1}
    out = [1]
    for n in range(1, count):
        out.append((catalan(n) - out[-1]) // 2)
    return out


SEQUENCES = {
    "motzkin": lambda n: sum(comb(n, 2 * k) * catalan(k) for k in range(n // 2 + 1)),
    "schroeder_large": lambda n: sum(comb(n, k) * comb(n + k, k) // (k + 1) for k in range(n + 1)),
    "catalan": catalan,
    "central_binomial": lambda n: comb(2 * n, n),
    "central_trinomial": lambda n: sum(comb(n, 2 * k) * comb(2 * k, k) for k in range(n // 2 + 1)),
    "delannoy_central": lambda n: sum(comb(n, k) * comb(n + k, k) for k in range(n + 1)),
    "riordan": lambda n: sum((-1) ** (n - k) * comb(n, k) * catalan(k) for k in range(n + 1)),
}


def main():
    doc = {name: {"terms": [str(f(n)) for n in range(COUNT)]} for name, f in SEQUENCES.items()}
    doc["fine"] = {"terms": [str(v) for v in fine(COUNT)]}
    json.dump(doc, sys.stdout, indent=1)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
