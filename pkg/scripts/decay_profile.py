#!/usr/bin/env python3
"""Profile the exponential decay of dimension ratios for a ladder family.

Prints, for each label n, the exact quantum/classical ratio A_n, the
certified geometric floor c^(n-1) A_1, and the square-root series term.
The final line reports the certified sum of the quasi-split series.
"""

from __future__ import annotations

import argparse
from fractions import Fraction

from qclassfun import criteria, fusion, intervals


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--kind", choices=["o-plus", "so3"], default="o-plus")
    parser.add_argument("--N", type=int, default=3)
    parser.add_argument("--qq", default="0.2", help="deformation (o-plus only)")
    parser.add_argument("--dimq", default=None, help="direct quantum dimension")
    parser.add_argument("--n-max", type=int, default=20)
    parser.add_argument("--tol", default="1e-8")
    args = parser.parse_args()

    if args.kind == "o-plus":
        if args.dimq is not None:
            family = fusion.su2_ladder(args.N, dim_q_fund=Fraction(args.dimq))
        else:
            family = fusion.su2_ladder(args.N, q=Fraction(args.qq))
    else:
        family = fusion.so3_ladder(args.N, dim_q_fund=Fraction(args.dimq or 5))

    a1 = Fraction(fusion.dim(1, family, "quantum")) / fusion.dim(1, family)
    c = 1 + (a1 - 1)
    print(f"# family={args.kind} N={args.N} A_1={a1} c={c}")
    print("n,dim,A_n,floor,term")
    floor = Fraction(1)
    for n in range(args.n_max + 1):
        a_n = Fraction(fusion.dim(n, family, "quantum")) / fusion.dim(n, family)
        if n >= 1:
            floor = a1 * c ** (n - 1)
        term = float(a_n) ** -0.5
        print(f"{n},{fusion.dim(n, family)},{float(a_n):.6g},{float(floor):.6g},{term:.6g}")

    result = criteria.quasi_split_sum_ladder(family, args.tol)
    if result.verdict is criteria.Verdict.CONVERGES:
        lo, hi = intervals.to_decimal_pair(result.sum_enclosure(), 12)
        print(f"# series converges: [{lo}, {hi}] using {result.terms_used} terms")
    else:
        print(f"# series verdict: {result.verdict.value}")


if __name__ == "__main__":
    main()
