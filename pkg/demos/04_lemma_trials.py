"""Random trials of the two trail inequalities, plus the exhaustive multipartite check."""
import random

from supereulerian import check_corollary_notSx, check_lemma_notST
from supereulerian.enumeration import lemma_trials, random_digraph, random_ditrail

rng = random.Random(5)

# one instance up close
while True:
    D = random_digraph(rng, 5, 0.6)
    T = random_ditrail(D, rng)
    S = random_ditrail(D, rng, avoid=set(T.arcs) if T else set())
    if T and S and T.length and S.length:
        break
print("D arcs:", D.arcs)
print("T:", T)
print("S:", S)
# a result only binds when its premise (no trail of the stated kind) is true
res = check_lemma_notST(D, T, S)
print("premise", res.premise, res.to_json())

x = T.initial
res = check_corollary_notSx(D, S, x)
print("premise", res.premise, res.to_json())

report = lemma_trials(2000, seed=5, max_n=6, smd_max_n=3)
for key in ("lemma_notST", "corollary_notSx", "smd_lemma"):
    print(key, {k: v for k, v in report[key].items() if k != "violating_instances"})
print("total violations:", report["violations"])
