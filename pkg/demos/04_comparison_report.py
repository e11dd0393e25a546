"""
Baseline vs NFM on held-out digit counts
========================================

Reads the runs made by ``python -m nfm.experiments --root runs/repro`` and
prints per-seed and mean exact-match accuracy. Unfinished runs are skipped.
"""

import sys
from pathlib import Path

from nfm import experiments

root = Path(sys.argv[1] if len(sys.argv) > 1 else "runs/repro")
cfgs = experiments.comparison_configs((0, 1, 2), "desk_budget", root)
results = experiments.collect(cfgs)

print(f"{'model':10s} {'seed':>4s} {'1':>7s} {'2*':>7s} {'3':>7s}  random(1/2/3)")
for (model, seed), r in sorted(results.items()):
    acc = r["eval"]["learned"]
    rnd = r["eval"].get("random_attention")
    tail = "/".join(f"{100 * rnd[c]:.1f}" for c in ("1", "2", "3")) if rnd else "-"
    print(f"{model:10s} {seed:4d} " + " ".join(f"{100 * acc[c]:7.1f}" for c in ("1", "2", "3")) + f"  {tail}")
print("* held out: trained on 1 and 3 digits")

s = experiments.summarize(results)
for model in experiments.MODELS:
    n = s[f"{model}.n"]
    if n:
        print(f"{model:10s} mean over {n} seed(s): held-out {100 * s[f'{model}.held_out']:.1f}  "
              f"trained {100 * s[f'{model}.trained']:.1f}")
