"""
Stacked digits, a tiny training run and the eval ablations
==========================================================

Needs the four MNIST IDX files (NFM_DATA_DIR or /root/data/mnist).
Sizes here are toy; the real comparison is ``python -m nfm.experiments``.
"""

import tempfile
from pathlib import Path

import numpy as np

from nfm.data import DEFAULT_DATA_DIR, StackedConfig, generate_set, load_pools, tile, write_png
from nfm.harness import preset, run_eval, run_train

out = Path(tempfile.mkdtemp(prefix="nfm-demo-"))

cfg = StackedConfig(canvas_size=64, digit_size=16)
train_pool, test_pool = load_pools(DEFAULT_DATA_DIR, cfg)
for count in (1, 2, 3):
    ds = generate_set(test_pool, 8, [count], cfg, seed=count)
    write_png(out / f"digits_{count}.png", tile(ds.images))
    print(count, "digit(s):", [np.flatnonzero(t).tolist() for t in ds.targets[:4]])

# train on 1 and 3 digits, evaluate on 1, 2 and 3
run = preset("smoke", 0, width=4, train_samples=256, eval_samples=64, epochs=2, batch_size=32,
             out=str(out / "run"))
res = run_train(run)
learned = run_eval(res.checkpoint, out=run.out)
shuffled = run_eval(res.checkpoint, random_attention=True, out=run.out)
occluded = run_eval(res.checkpoint, occlude=True, out=run.out)
one_pass = run_eval(res.checkpoint, passes_override=1, out=run.out)

for recs in (learned, shuffled, occluded, one_pass):
    print(f"{recs[0].variant:18s}", "  ".join(f"{r.count}: {r.accuracy:.3f}" for r in recs))
print("outputs in", out)
