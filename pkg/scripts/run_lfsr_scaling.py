#!/usr/bin/env python3
"""Key-search wall-clock as the key length grows.

For each key length, generates `--trials` random key/message instances,
runs the zonotope key search, verifies every recovered key by
re-encryption, and prints mean/min/max seconds per length plus the
ratio of each mean to the previous one.
"""

import argparse
import random
import statistics
import sys
import time
from dataclasses import dataclass

from logzono.casestudies import encrypt, key_search, make_instance, scaled_spec


@dataclass(frozen=True)
class ScalingConfig:
    lengths: tuple = (16, 24, 30, 60)
    trials: int = 3
    seed: int = 0
    message_factor: int = 4


def parse_args(argv) -> ScalingConfig:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lengths", default="16,24,30,60")
    ap.add_argument("--trials", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--message-factor", type=int, default=4,
                    help="message length = factor * key length")
    a = ap.parse_args(argv)
    return ScalingConfig(tuple(int(x) for x in a.lengths.split(",")),
                         a.trials, a.seed, a.message_factor)


def main(argv=None) -> int:
    cfg = parse_args(argv)
    rng = random.Random(cfg.seed)
    print(f"{'l_k':>5}  {'mean_s':>8}  {'min_s':>8}  {'max_s':>8}  "
          f"{'vs_prev':>7}  verified")
    prev_mean = None
    for length in cfg.lengths:
        spec = scaled_spec(length)
        times = []
        for _ in range(cfg.trials):
            key = tuple(rng.randint(0, 1) for _ in range(length))
            msg = [rng.randint(0, 1)
                   for _ in range(cfg.message_factor * length)]
            inst = make_instance(spec, key, msg)
            t0 = time.perf_counter()
            found = key_search(spec, inst)
            times.append(time.perf_counter() - t0)
            if encrypt(spec, found, inst.message) != inst.cipher:
                print(f"verification failed at l_k={length}",
                      file=sys.stderr)
                return 2
        mean = statistics.mean(times)
        ratio = f"{mean / prev_mean:.2f}x" if prev_mean else "-"
        print(f"{length:>5}  {mean:>8.3f}  {min(times):>8.3f}  "
              f"{max(times):>8.3f}  {ratio:>7}  yes")
        prev_mean = mean
    return 0


if __name__ == "__main__":
    sys.exit(main())
