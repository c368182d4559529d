#!/usr/bin/env python3
"""Cross-check the closed-form gap sequence against literal expansion.

Sweeps every gapped form inside the given structural bounds, computes the
gap sequence twice (closed form and by expanding an actual prefix of the
infinite word), and reports any disagreement.  Also checks the scaling
recurrence A(p*i) = s*A(i) + gamma1 + gamma2 on the closed values.
"""
from __future__ import annotations

import argparse
import sys
import time
from itertools import product

from trimorph.morphisms import Core, TriangularForm
from trimorph.omega import gap_sequence, gap_sequence_direct


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-p", type=int, default=5, help="largest b-count")
    parser.add_argument("--max-s", type=int, default=3)
    parser.add_argument("--max-exp", type=int, default=3, help="largest padding or gap")
    parser.add_argument("--upto", type=int, default=2000, help="gaps compared per form")
    parser.add_argument("--recurrence", type=int, default=500, help="indexes checked")
    args = parser.parse_args()

    start = time.perf_counter()
    forms = failures = 0
    for p in range(2, args.max_p + 1):
        for s in range(1, args.max_s + 1):
            for gamma1 in range(args.max_exp + 1):
                for alphas in product(range(args.max_exp + 1), repeat=p - 1):
                    for gamma2 in range(args.max_exp + 1):
                        form = TriangularForm(s, Core(gamma1, alphas, gamma2))
                        horizon = max(args.upto, p * args.recurrence)
                        closed = gap_sequence(form, horizon)
                        direct = gap_sequence_direct(form, args.upto)
                        ok = closed[: args.upto] == direct
                        gg = gamma1 + gamma2
                        lhs = closed[p - 1 : p * args.recurrence : p]
                        rhs = [s * v + gg for v in closed[: args.recurrence]]
                        ok = ok and lhs == rhs
                        forms += 1
                        if not ok:
                            failures += 1
                            print(f"DISAGREEMENT: {form}")
    elapsed = time.perf_counter() - start
    print(
        f"{forms} forms checked to {args.upto} gaps "
        f"(recurrence to index {args.recurrence}) in {elapsed:.1f}s, "
        f"{failures} disagreements"
    )
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
