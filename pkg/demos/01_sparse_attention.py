"""
Top-k attention over a multi-resolution memory
==============================================

Walks through the pieces one NFM block is built from: the sparse softmax,
the token set made from earlier feature maps, and where a query position
actually looks.
"""

import numpy as np

from nfm.attention import LayerMemory, build_token_set
from nfm.engine import Tensor, precision, softmax, topk_softmax

rng = np.random.default_rng(0)

# top-k softmax keeps the k largest logits and renormalises over them
logits = Tensor(np.array([[2.0, 0.5, 3.0, -1.0, 3.0]]))
print("dense  ", np.round(softmax(logits, axis=-1).data, 3))
print("top-2  ", np.round(topk_softmax(logits, 2).data, 3))  # the two 3.0s
print("top-3  ", np.round(topk_softmax(logits, 3).data, 3))

# ties go to the lower index, so equal logits give a deterministic choice
print("zeros k=2", topk_softmax(Tensor(np.zeros((1, 4))), 2).data)

# memory after pass 1 (five block outputs) and four blocks into pass 2
mem = LayerMemory()
for p, sizes in ((1, [32, 16, 8, 4, 4]), (2, [32, 16, 8, 4])):
    for i, s in enumerate(sizes, 1):
        mem.append(p, i, Tensor(rng.standard_normal((1, s, s, 3))))

# finer maps are cut into windows, one token per pixel of the window
tokens = build_token_set(mem, (4, 4), "space_to_depth")
print("tokens per 4x4 query position:", tokens.size)
per_source = {}
for key, _ in tokens.describe()[1:]:
    per_source[key] = per_source.get(key, 0) + 1
for key, n in per_source.items():
    print(f"  pass {key[0]} block {key[1]}: {n}")

# nearest rescaling squeezes each entry to one token instead
print("nearest mode:", build_token_set(mem, (4, 4), "nearest").size)

# a single real token next to the zero slot: the output is w * v
with precision(np.float64):
    q, k, v = np.array([1.0, 2.0]), np.array([0.5, 0.25]), np.array([3.0, -1.0])
    s = q @ k / np.sqrt(2)
    w = topk_softmax(Tensor(np.array([[0.0, s]])), 2).data[0]
    print(f"logits [0, {s:.3f}] -> weights {np.round(w, 3)}, output {np.round(w[1] * v, 3)}")
