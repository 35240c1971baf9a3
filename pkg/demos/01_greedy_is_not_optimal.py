"""
When greedy domination goes wrong
=================================

The greedy rule picks the vertex that covers the most uncovered vertices.
On this 12-vertex graph it needs three vertices while two suffice, and no
two selected vertices are adjacent, so purification has nothing to work on.
"""

from domset import exact_gamma, fixture, greedy_dominating_set
from domset.greedy import certificates, tied_pair_emptiness

G = fixture("fig3-counter")
trace = greedy_dominating_set(G)

# Each step covers a disjoint batch of vertices.
for step, (v, cov) in enumerate(zip(trace.order, trace.coverage), start=1):
    print(f"step {step}: pick {G.label(v)}, newly covered {sorted(str(G.label(u)) for u in cov)}")

# No selected vertex was first covered by an earlier selection.
print("no tied pairs:", tied_pair_emptiness(G, trace))
print("certificates:", [c.kind for c in certificates(G, trace)] or "none")

# Exhaustive search finds the true optimum.
best = exact_gamma(G)
print(f"greedy size {len(trace)}, optimum {best.gamma} via "
      f"{sorted(str(G.label(v)) for v in best.witness)}")
