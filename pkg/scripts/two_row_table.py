"""Compare g((r^2-b, b), r x r, r x r) with p_b(r,r) - p_{b-1}(r,r) for small r."""

import argparse

from symkron.coefficients import two_row_comparison


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=int, nargs="+", default=[2, 3])
    for r in ap.parse_args().r:
        print(f"r = {r}")
        for b in range(r * r // 2 + 1):
            row = two_row_comparison(r, b)
            mark = "" if row["agree"] else "  <- differs"
            print(f"  b={b:>2}  g={row['kronecker']:>3}  p_b-p_(b-1)={row['box_difference']:>3}{mark}")


if __name__ == "__main__":
    main()
