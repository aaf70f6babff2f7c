"""Counts of E[m](GF(p^k)) for k = 1, 2, ... until the full m^2 is reached.

    python scripts/division_points_table.py --coeffs 1,0,0,1 --primes 5,7,11 --ms 2,3,4
"""

import argparse
from dataclasses import dataclass

from fermatfield import elliptic as ec


@dataclass
class TorsionConfig:
    coeffs: tuple[int, int, int, int] = (1, 0, 0, 1)
    primes: tuple[int, ...] = (5, 7, 11, 13)
    ms: tuple[int, ...] = (2, 3)
    max_ext: int = ec.DEFAULT_MAX_EXT


def run(cfg: TorsionConfig) -> None:
    print("p   m   counts by degree")
    for p in cfg.primes:
        E = ec.curve_make(*cfg.coeffs, field=p)
        for m in cfg.ms:
            if m % p == 0:
                continue
            try:
                tower = ec.division_tower(E, m, cfg.max_ext)
            except ec.ExtensionBoundExceeded as exc:
                print(f"{p:<3} {m:<3} {exc}")
                continue
            print(f"{p:<3} {m:<3} {tower}")


def ints(text):
    return tuple(int(v) for v in text.split(","))


if __name__ == "__main__":
    d = TorsionConfig()
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--coeffs", type=ints, default=d.coeffs)
    ap.add_argument("--primes", type=ints, default=d.primes)
    ap.add_argument("--ms", type=ints, default=d.ms)
    ap.add_argument("--max-ext", type=int, default=d.max_ext)
    a = ap.parse_args()
    run(TorsionConfig(a.coeffs, a.primes, a.ms, a.max_ext))
