"""
Counterfactual explanations from the victim
===========================================

The explainer removes history items until the target leaves the top-k
list, then prunes the removal set until every item in it is needed. On
short histories the result can be checked against exhaustive search.
"""

import numpy as np

from hcars.data import block_dataset
from hcars.errors import InfeasibleExplanationError
from hcars.explainer import ExplanationAPI
from hcars.target import TargetTrainConfig, train_target

mat = block_dataset(20, 40, density=0.5, seed=0)
model = train_target(mat, TargetTrainConfig(d=16, epochs=50, lr=0.01, batch_size=64, seed=0))
api = ExplanationAPI(model, mat, k=5, seed=0)

rng = np.random.default_rng(1)
print(" user  target  |I_u|  greedy  brute force")
for u in range(mat.m):
    t = int(rng.choice(api.recommended(u)))
    try:
        cf = api.explain(u, t)
    except InfeasibleExplanationError:
        print(f"{u:5d} {t:7d} {len(api.user_history(u)):6d}  (no explanation)")
        continue
    best = api.brute_force_cf(u, t)
    assert api.is_valid_cf(u, t, cf.removed) and api.is_minimal(cf)
    print(f"{u:5d} {t:7d} {len(api.user_history(u)):6d}  {str(cf.removed):14s} {best.removed}")

# removing the explanation really evicts the target
u = next(u for u in range(mat.m) if len(api.user_history(u)) > 3)
t = int(api.recommended(u)[0])
try:
    cf = api.explain(u, t)
    print(f"\nuser {u}: top-5 {api.recommended(u).tolist()}, removing {cf.removed} evicts {t}")
except InfeasibleExplanationError:
    print(f"\nuser {u}: no explanation for {t}")
