"""Print sm(1^a, ell) and am(1^a, ell) with their self-conjugate witnesses."""

import argparse

from symkron.certifier import scan_exceptional
from symkron.partitions import format_partition


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-a", type=int, default=14)
    scan = scan_exceptional(ap.parse_args().max_a)
    print(f"{'a':>3} {'ell':>4} {'sm':>8} {'am':>8}  sign+ witness / sign- witness")
    for r in scan.rows:
        w = [format_partition(x) if x else "-" for x in (r.sm_witness, r.am_witness)]
        print(f"{r.a:>3} {r.ell:>4} {r.sm:>8} {r.am:>8}  {w[0]} / {w[1]}")
    print("X_s =", set(scan.X_s))
    print("X_a =", set(scan.X_a))


if __name__ == "__main__":
    main()
