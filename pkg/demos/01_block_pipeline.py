"""
Poisoning a small recommender end to end
========================================

Two blocks of users and items, a victim trained on all of it, and an
attacker who sees 80% of the interactions. The attacker asks the victim
for counterfactual explanations, fits a neural-logic surrogate, crafts two
fake users against it and then lets the victim retrain.
"""

import math

import numpy as np

from hcars.attack import AttackConfig, bandwagon, run_hcars
from hcars.data import block_dataset, popularity, split
from hcars.explainer import ExplanationAPI, harvest_cfs
from hcars.harness import hit_ratio, precision_at_k, sample_targets
from hcars.surrogate import SurrogateTrainConfig, train_surrogate
from hcars.target import TargetTrainConfig, inject_and_retrain, train_target

mat = block_dataset(n_users=40, n_items=60, density=0.4, seed=0, cold_items=4)
print(mat)

# the victim: an NCF model the attacker can only query
tcfg = TargetTrainConfig(d=16, epochs=30, lr=0.01, seed=0)
victim = train_target(mat, tcfg)

# what the attacker has seen
observed = split(mat, 0.8, seed=0).train
users = np.arange(mat.m)

# explanations for 60% of the users, one recommended item each
api = ExplanationAPI(victim, mat, k=5, seed=0)
cf_users = np.sort(np.random.default_rng(0).choice(mat.m, size=24, replace=False))
cfs, stats = harvest_cfs(api, cf_users, seed=0)
print(f"{len(cfs)} explanations, {stats['infeasible']} requests had none")
print("first one:", cfs[0])

# the surrogate, with and without the explanations
scfg = SurrogateTrainConfig(d=16, d_h=32, epochs=60, lr=0.005, seed=0)
surrogate = train_surrogate(observed, cfs, scfg)
plain = train_surrogate(observed, [], SurrogateTrainConfig(**{**scfg.__dict__, "lambda1": 0.0}))
print(f"P@10 against the victim: with CFs {precision_at_k(surrogate, victim, users, 10, observed):.3f}, "
      f"without {precision_at_k(plain, victim, users, 10, observed):.3f}")

# two target items, 5% of the user count as fake users
targets = sample_targets(observed, 2, seed=0)
budget = math.ceil(0.05 * mat.m)
acfg = AttackConfig(targets, budget=budget, n_f=10, pool_size=40, user_sample=16, seed=0)

before = hit_ratio(victim, users, targets, 5, mat)
for name, profiles in [("H-CARS", run_hcars(surrogate, observed, acfg)),
                       ("Bandwagon", bandwagon(observed, popularity(observed), acfg))]:
    poisoned = inject_and_retrain(mat, profiles, tcfg)
    after = hit_ratio(poisoned, users, targets, 5, mat)
    print(f"{name:9s} HR@5 of targets {targets}: {before:.3f} -> {after:.3f}")
    print("   first profile:", profiles[0].items)
