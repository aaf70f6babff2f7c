"""Fermat survey over prime fields (or a fixed extension degree) with claim verdicts.

    python scripts/run_survey.py --p-max 31 --ext 1
"""

import argparse
from dataclasses import dataclass

from fermatfield import fermat


@dataclass
class SurveyConfig:
    p_max: int = 31
    ext: int = 1


def run(cfg: SurveyConfig) -> None:
    records = fermat.survey(cfg.p_max, cfg.ext)
    for v in fermat.claim_eval_all(records):
        free = ",".join(map(str, v.observed_free_set))
        cex = ",".join(map(str, v.counterexamples)) or "-"
        print(f"q={v.q:4d}  free n: {free:<28} predicted: {v.predicted_set}  counterexamples: {cex}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p-max", type=int, default=SurveyConfig.p_max)
    ap.add_argument("--ext", type=int, default=SurveyConfig.ext)
    a = ap.parse_args()
    run(SurveyConfig(a.p_max, a.ext))
