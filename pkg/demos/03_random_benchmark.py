"""
Purification on large sparse random graphs
==========================================

Connected random graphs with about as many edges as vertices. Greedy keeps
roughly 40% of the vertices; purification trims a further few percent.
"""

import numpy as np

from domset.bench import run_bench, summarize

rows = run_bench(count=8, n_range=(5800, 7400), m_factor=1.01, seed=7)

print(f"{'n':>6} {'m':>6} {'greedy':>7} {'|S*|':>6} {'cut':>5} {'pct':>6} {'sec':>6}")
for r in rows:
    secs = r.t_greedy + r.t_forest + r.t_purify
    print(f"{r.n:>6} {r.m:>6} {r.greedy:>7} {r.purified:>6} {r.purification:>5} "
          f"{r.reduction_pct:>6.2f} {secs:>6.2f}")

# Greedy size relative to n, and the mean reduction over the batch.
print("greedy / n:", np.round(np.mean([r.greedy / r.n for r in rows]), 3))
print("mean reduction: %.2f%%" % summarize(rows)["mean_reduction_pct"])

# On small graphs the exact optimum is in reach, giving realized ratios.
small = run_bench(count=50, n_range=(10, 18), m_factor=1.3, seed=1, exact=True)
s = summarize(small)
print(f"small graphs: worst greedy/gamma {s['max_greedy_ratio']:.3f}, "
      f"worst purified/gamma {s['max_purified_ratio']:.3f}")
