"""Write the closed-form pendant-star sizes on P_n* as CSV (n,k,f,is_argmax)."""

import argparse
import csv
import sys

from pendant_ekr.closed_forms import star_product_rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-min", type=int, default=1)
    ap.add_argument("--n-max", type=int, default=30)
    args = ap.parse_args()

    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["n", "k", "f", "is_argmax"])
    for n in range(args.n_min, args.n_max + 1):
        for n_, k, f, best in star_product_rows(n):
            w.writerow([n_, k, f, str(best).lower()])


if __name__ == "__main__":
    main()
