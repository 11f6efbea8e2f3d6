"""Bounds versus constructed sequence lengths for odd pretzel knots.

    python3 scripts/pretzel_table.py --max-param 6
    python3 scripts/pretzel_table.py --max-param 2 --verify
"""
from __future__ import annotations

import argparse
import itertools
from dataclasses import dataclass

from knotbound.obstruct import refined_bound, theorem_bound
from knotbound.sequences import pretzel_sequence, verify_sequence
from knotbound.skein import pretzel_p0


@dataclass
class Config:
    max_param: int = 4
    verify: bool = False  # build diagrams and verify each sequence (slow past 3)
    max_crossings: int = 24


def rows(cfg: Config):
    for p, q, r in itertools.combinations_with_replacement(range(1, cfg.max_param + 1), 3):
        p0 = pretzel_p0(p, q, r)
        cert = pretzel_sequence(p, q, r)
        ok = verify_sequence(cert, cfg.max_crossings).valid if cfg.verify else None
        yield (p, q, r), p0, theorem_bound(p0), refined_bound(p0), cert.claimed_length, ok


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-param", type=int, default=Config.max_param)
    ap.add_argument("--verify", action="store_true")
    args = ap.parse_args()
    cfg = Config(args.max_param, args.verify)
    print(f"{'bands':<12}{'theorem':>8}{'refined':>8}{'length':>8}  {'verified':<9}p0")
    for pqr, p0, tb, rb, n, ok in rows(cfg):
        bands = ",".join(str(2 * x + 1) for x in pqr)
        flag = "" if ok is None else ("yes" if ok else "NO")
        print(f"{bands:<12}{tb.bound:>8}{rb.bound:>8}{n:>8}  {flag:<9}{p0}")


if __name__ == "__main__":
    main()
