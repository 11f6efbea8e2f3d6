"""Timing of the skein engine on family diagrams and random braids.

    python3 scripts/bench_homfly.py --braids 50 --seed 1
"""
from __future__ import annotations

import argparse
import random
import statistics
import time
from dataclasses import dataclass

from knotbound.acceptance import random_braid
from knotbound.knotio import Pretzel, Twist, to_pd
from knotbound.skein import homfly


@dataclass
class Config:
    braids: int = 50
    seed: int = 0
    max_crossings: int = 24


def timed(d, cfg: Config) -> float:
    t0 = time.perf_counter()
    homfly(d, max_crossings=cfg.max_crossings)
    return time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--braids", type=int, default=Config.braids)
    ap.add_argument("--seed", type=int, default=Config.seed)
    args = ap.parse_args()
    cfg = Config(args.braids, args.seed)

    for pres in [Pretzel(1, 1, 1), Pretzel(2, 2, 2), Pretzel(3, 3, 3), Twist(4), Twist(8)]:
        d = to_pd(pres)
        print(f"{type(pres).__name__}({pres.format()}): {len(d)} crossings, {timed(d, cfg):.3f}s")

    rng = random.Random(cfg.seed)
    times = [timed(to_pd(random_braid(rng)), cfg) for _ in range(cfg.braids)]
    print(f"{cfg.braids} random braids: median {statistics.median(times) * 1e3:.2f}ms, max {max(times) * 1e3:.2f}ms")


if __name__ == "__main__":
    main()
