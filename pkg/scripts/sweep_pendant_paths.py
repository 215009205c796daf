"""Empirical sweep: is P_n* EKR for every r <= n/2?

Exact verdicts on small instances only. A clean run is evidence, not a proof.
"""

import argparse
import time

from pendant_ekr.errors import SolverCapError
from pendant_ekr.graphs import pendant_family
from pendant_ekr.solver import ekr_verdict


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=9)
    ap.add_argument("--strict", action="store_true")
    args = ap.parse_args()

    bad = 0
    print("n,r,max_star,max_intersecting,verdict,seconds")
    for n in range(2, args.n_max + 1):
        g = pendant_family("path", n)
        for r in range(1, n // 2 + 1):
            t0 = time.perf_counter()
            try:
                v = ekr_verdict(g, r, strictness=args.strict)
            except SolverCapError as exc:
                print(f"{n},{r},,,capped ({exc}),")
                continue
            bad += v.verdict == "not-EKR"
            print(f"{n},{r},{v.max_star_size},{v.max_intersecting_size},{v.verdict},"
                  f"{time.perf_counter() - t0:.2f}")
    print(f"# counterexamples found: {bad}")


if __name__ == "__main__":
    main()
