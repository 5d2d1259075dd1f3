"""
Intervals of an extended order: elementary relations, covers, maximal
chains and DOT export.
"""
from __future__ import annotations

from collections import Counter

from renner_order import OrbitContext, type_A
from renner_order import chains, oracle

W = type_A(3)
ctx = OrbitContext(W, N={0, 2}, C={2})
# for ++ the a-factor grows upward and the b-factor grows downward
bottom = ctx.canonicalize(W.identity, W.elt([1]))
top = ctx.canonicalize(W.elt([1, 0, 2, 1]), W.identity)
sign = "++"
print(f"[{bottom}, {top}] under {sign}")

G = chains.interval(bottom, top, sign)
print(len(G.vertices), "vertices,", len(G.edges), "cover edges")
print("edge kinds:", dict(Counter(e.kind for e in G.edges)))

found = chains.maximal_chains(bottom, top, sign, graph=G)
print(len(found), "maximal chains, lengths", sorted({len(c) - 1 for c in found}))
print("greedy chain:", " < ".join(map(str, chains.saturated_chain(bottom, top, sign, graph=G))))

# the covers are exactly the Hasse diagram of the order
hasse = oracle.hasse_from_order(G.vertices, lambda p, q: ctx.ext_leq(p, q, sign))
print("covers match Hasse diagram:", hasse == {(e.lo, e.hi) for e in G.edges})

# translating an elementary relation by a simple reflection
edge = G.edges[0]
for s in range(W.rank):
    print(f"s={s}:", chains.translate_edge(s, edge, "left"))

print(chains.export_dot(G)[:300], "...")
