"""Classify sm(lam, 7) > 0 up to a weight cap and list every zero."""

import argparse

from symkron.certifier import SMALL_VALUES_EXCEPTIONS, reproduce_small_values
from symkron.partitions import format_partition


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cap", type=int, default=12)
    rep = reproduce_small_values(ap.parse_args().cap)
    print(f"checked {rep.checked} partitions with |lam| <= {rep.weight_cap}, len <= 14")
    for z in rep.zeros:
        tag = "listed" if z in SMALL_VALUES_EXCEPTIONS else "NOT LISTED"
        print(f"  sm({format_partition(z)}, 7) = 0  [{tag}]")
    print("mismatches:", [format_partition(z) for z in rep.mismatches] or "none")


if __name__ == "__main__":
    main()
