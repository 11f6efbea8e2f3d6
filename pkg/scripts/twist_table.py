"""Twist knots: the gap between u = 1 and the positive genus-one bound m.

    python3 scripts/twist_table.py --max-m 10
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from knotbound.knotio import Twist
from knotbound.obstruct import gordian_one_test, theorem_bound
from knotbound.poly import LaurentPoly
from knotbound.skein import twist_p0


@dataclass
class Config:
    max_m: int = 8


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-m", type=int, default=Config.max_m)
    cfg = Config(ap.parse_args().max_m)
    print(f"{'2m':>4}{'bound':>7}  {'rules':<8}{'step':<6}p0")
    for m in range(1, cfg.max_m + 1):
        p0 = twist_p0(m)
        tb = theorem_bound(p0)
        # Conway of T_2m is 1 - m z^2, so a2 = -m
        prev = twist_p0(m - 1) if m > 1 else LaurentPoly.constant(1)
        step = gordian_one_test(p0, prev, -m, -(m - 1), 1)
        print(f"{Twist(m).format():>4}{tb.bound:>7}  {','.join(tb.rules_fired):<8}{'pass' if step.passed else 'fail':<6}{p0}")


if __name__ == "__main__":
    main()
