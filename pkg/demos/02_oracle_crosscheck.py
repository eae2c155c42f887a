#!/usr/bin/env python3
"""The exact-linear-algebra oracle: calibration, raw matrix input, and a
randomized cross-validation against the contraction pipeline.

Run from the repository root:  python demos/02_oracle_crosscheck.py
"""

from pathlib import Path

from linequiv import (analyze, canonical_pair, compare, full_invariants,
                      oracle_invariants, parse_graph, parse_pair_file,
                      regular_pair)
from linequiv import ratpoly as rp
from linequiv.cli import run_fuzz
from linequiv.linearize import linearize
from fractions import Fraction

DATA = Path(__file__).parent / "data"


def main():
    print("calibration on canonical single-summand pairs:")
    for family, n in [("zt", 2), ("tz", 3), ("t", 1), ("ztz", 0)]:
        rec = oracle_invariants(canonical_pair(family, n))
        print(f"  {family}[{n}] matrices -> {rec.describe()}")
    rec = oracle_invariants(regular_pair(rp.poly(-1, 1)))
    print(f"  S(X - 1) matrices      -> {rec.describe()}")
    rec = oracle_invariants(regular_pair(rp.poly(1, 0, 1)))
    print(f"  S(X^2 + 1) matrices    -> {rec.describe()}")
    print()

    print("raw pencil data for g4 (23 x 18 matrices):")
    pair = linearize(parse_graph((DATA / "g4.edges").read_text()))
    report = analyze(pair)
    print(f"  row minimal indices:    {list(report.left_minimal_indices)}")
    print(f"  column minimal indices: {list(report.right_minimal_indices)}")
    divisors = [f"({rp.poly_str(p)})^{e}" for p, e in report.finite_divisors]
    print(f"  divisors of M + X*N:    {divisors}")
    print(f"  X-powers of N + X*M:    {list(report.infinite_divisors)}")
    print()

    print("a matrix pair straight from a text file:")
    pair = parse_pair_file((DATA / "pair_ztz1.txt").read_text())
    print(f"  {pair.edge_dim} x {pair.vertex_dim} pair -> "
          f"{oracle_invariants(pair).describe()}")
    print()

    print("cross-validating 60 random relations (both routes must agree):")
    for prob in (Fraction(1, 10), Fraction(3, 10), Fraction(1, 2)):
        failures, seed, diffs = run_fuzz(seed=7, count=20, vertices=5,
                                         edge_prob=prob)
        print(f"  edge probability {prob}: 20 trials, {failures} failures")
        assert failures == 0, (seed, diffs)

    g4 = parse_graph((DATA / "g4.edges").read_text())
    assert not compare(full_invariants(g4), oracle_invariants(linearize(g4)))
    print("  g4 itself: both routes agree")


if __name__ == "__main__":
    main()
