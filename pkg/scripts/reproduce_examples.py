#!/usr/bin/env python3
"""Regenerate the published reference expansions and diff them term by term.

Equivalent to `hypersecant reproduce`; kept as a script so the check can be
run without installing the console entry point.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from hypersecant import reproduce_reference_examples  # noqa: E402


def main() -> int:
    report = reproduce_reference_examples()
    for name in ("cubic", "pentad", "generic_quintic"):
        section = report[name]
        status = "ok" if section["match"] else "MISMATCH"
        print(f"{name}: {status} "
              f"(expected {section['expected_terms']}, computed {section['computed_terms']})")
        for mm in section.get("mismatches", []):
            print(f"  {mm['monomial']}: expected {mm['expected']}, computed {mm['computed']}")
    print("PASS" if report["match"] else "FAIL")
    return 0 if report["match"] else 1


if __name__ == "__main__":
    sys.exit(main())
