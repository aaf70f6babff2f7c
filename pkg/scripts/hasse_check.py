"""Largest |a_p| / 2 sqrt(p) over good primes for random small integer curves.

    python scripts/hasse_check.py --curves 20 --p-max 200 --seed 0
"""

import argparse
import random
from dataclasses import dataclass

from fermatfield import elliptic as ec


@dataclass
class HasseConfig:
    curves: int = 20
    p_max: int = 200
    coeff_range: int = 10
    seed: int = 0


def run(cfg: HasseConfig) -> float:
    rng = random.Random(cfg.seed)
    worst = 0.0
    done = 0
    while done < cfg.curves:
        E = ec.IntegerCurve(*(rng.randint(-cfg.coeff_range, cfg.coeff_range) for _ in range(3)))
        if not E.discriminant:
            continue
        done += 1
        series = ec.ap_series(E, cfg.p_max)
        ratio = max(abs(a) / (2 * p**0.5) for p, a in series)
        worst = max(worst, ratio)
        print(f"b,c,d={E.b},{E.c},{E.d}  disc={E.discriminant:<8} good primes={len(series):<3} max ratio={ratio:.3f}")
    print(f"worst ratio {worst:.3f} (Hasse bound is 1)")
    return worst


if __name__ == "__main__":
    d = HasseConfig()
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--curves", type=int, default=d.curves)
    ap.add_argument("--p-max", type=int, default=d.p_max)
    ap.add_argument("--coeff-range", type=int, default=d.coeff_range)
    ap.add_argument("--seed", type=int, default=d.seed)
    a = ap.parse_args()
    run(HasseConfig(a.curves, a.p_max, a.coeff_range, a.seed))
