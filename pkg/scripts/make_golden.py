"""Regenerate the golden verify-paper reports under tests/golden/."""

import argparse
import json
from pathlib import Path

from symkron.audit import verify_paper

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--level", choices=("quick", "full"), action="append")
    args = ap.parse_args()
    GOLDEN.mkdir(exist_ok=True)
    for level in args.level or ["quick"]:
        report, code = verify_paper(level)
        hashed = {k: report[k] for k in ("schema", "body", "digest")}
        path = GOLDEN / f"verify_{level}.json"
        path.write_text(json.dumps(hashed, sort_keys=True, indent=2) + "\n")
        print(f"{path} exit={code} failed={report['body']['summary']['failed']}")


if __name__ == "__main__":
    main()
