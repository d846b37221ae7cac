"""Walk through the D(n1, n2) construction: strong, multipartite, one nonadjacent pair, not supereulerian."""
from supereulerian import audit_family, build_family, classify_pairs, decide, sharpness_audit

fam = build_family(2, 3)
D = fam.digraph
print("n =", D.n, "m =", D.m, "expected m =", fam.params.expected_arc_count)

labels = fam.labels()
print("u, v, w', w:", fam.u, fam.v, fam.w_prime, fam.w)
print("block 1:", [labels[x] for x in fam.block1])
print("block 2:", [labels[x] for x in fam.block2])

# the only way into block 2 is the arc w' -> w
b2 = set(fam.block2)
print("arcs entering block 2:", [a for a in D.arcs if a[1] in b2 and a[0] not in b2])

(pc,) = classify_pairs(D)
print("pair", pc.pair, "dominated by", sorted(pc.dominated_by), "dominates", sorted(pc.dominates))
print("degree sum", pc.degree_sum, "vs 2n-4 =", 2 * D.n - 4)

print("verdict:", decide(D).verdict)

# how far each degree condition misses
for h, entry in sharpness_audit(D).items():
    print(f"  {h.value:8s} margins {entry.margins}")

# the full grid of small parameters
for n1 in (1, 2, 3):
    for n2 in (1, 2, 3):
        audit = audit_family(n1, n2)
        print((n1, n2), "passed" if audit.passed else audit.mismatches(),
              "weakened bound:", audit["weakened_5n_bound"].actual)
