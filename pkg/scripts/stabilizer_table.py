"""Annihilator and invariant dimensions of the trace-power polynomial."""

import argparse

from symkron.stabilizer import stabilizer_report

PAIRS = [(2, 2), (2, 3), (3, 2), (3, 3), (3, 4), (4, 3), (3, 5), (4, 4)]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=1)
    trials = ap.parse_args().trials
    print(f"{'n':>2} {'m':>2} {'ann':>4} {'n^2-1':>6} {'inv':>4} {'p(m,<=n)':>9} sym")
    for n, m in PAIRS:
        r = stabilizer_report(n, m, trials)
        print(f"{n:>2} {m:>2} {r['annihilator_dimension']:>4} {r['expected_annihilator']:>6} "
              f"{r['invariant_dimension']:>4} {r['partitions_of_m_in_n_parts']:>9} {not r['symmetry']['mismatches']}")


if __name__ == "__main__":
    main()
