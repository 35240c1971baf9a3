"""
Purifying a greedy set
======================

On the spider graph the greedy stage keeps the hub, all four middle
vertices and all eight stems: 13 of 21 vertices. The tied pairs form one
tree rooted at the hub, and purification walks it bottom-up.
"""

from domset import exact_gamma, fixture, solve
from domset.purify import PURIFIED

G = fixture("fig1-spider")
r = solve(G)
F = r.forest


def show(v, depth=0):
    mark = "x" if r.state.status[v] == PURIFIED else " "
    print(f"  [{mark}] {'    ' * depth}{G.label(v)}")
    for c in F.children[v]:
        show(c, depth + 1)


# The cluster forest, with purified vertices marked.
for root in F.roots:
    show(root)

# Stems guard their pendants, so they stay. Each middle vertex sits between
# a kept stem and the hub and gets purified.
print("status changes:")
for v, old, new in r.state.log:
    print(f"  {G.label(v)}: {old} -> {new}")

print(f"greedy {len(r.greedy_set)}, purified {len(r.purified_set)}, "
      f"optimum {exact_gamma(G).gamma}")

# The two modes differ on the root: strict keeps it, extended drops it
# once a firm child covers it.
spider = fixture("two-leg-spider")
for mode in ("strict", "extended"):
    kept = solve(spider, mode=mode).purified_set
    print(f"two-leg spider, {mode}: {sorted(spider.label(v) for v in kept)}")
