"""Reproduce the 13 maximal complete sets on two qubits.

Builds all 18 composite structures (3 constituent choices per qubit, wire
on/off), decides complementarity with both pipelines, and enumerates the
maximal cliques of the resulting graph.
"""

from compcs.names import name_of, name_str
from compcs.search import build_graph, classify_set, maximal_cliques

g = build_graph(2, "both")  # raises if the two pipelines ever disagree
print(f"{g.n} structures, "
      f"{sum(bin(a).count('1') for a in g.adj) // 2} complementary pairs\n")

cliques = [c for c in maximal_cliques(g) if len(c) == 5]
for k, c in enumerate(cliques, 1):
    sc, bs, ns = classify_set(g, c)
    print(f"set {k:2d}  (separable {sc}, non-separable {ns}):")
    for v in c:
        print("   ", name_str(name_of(g.vertices[v])))
print(f"\n{len(cliques)} maximal complete sets of size 5")
