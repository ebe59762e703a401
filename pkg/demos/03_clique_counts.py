"""Triangles and 4-cliques of Peisert-like graphs: direct census against the
closed forms.

Run:  python demos/03_clique_counts.py
"""

import time

from peisert import graph as gr

print(f"{'q':>5} {'g':>3} {'degree':>7} {'edges':>7} {'k3':>8} {'k4 census':>10} "
      f"{'k4 formula':>10} {'ms':>6}")
for p, alpha in [(17, 1), (41, 1), (73, 1), (89, 1), (97, 1), (113, 1), (17, 2)]:
    t0 = time.perf_counter()
    g = gr.build_graph(p, alpha)
    k3 = gr.k3_brute(g)
    k4 = gr.k4_brute(g)
    ms = 1000 * (time.perf_counter() - t0)
    assert k3 == gr.k3_formula(p, alpha)
    print(f"{g.n:>5} {g.group.g:>3} {gr.degree(g, 0):>7} {gr.edge_count(g):>7} {k3:>8} "
          f"{k4:>10} {gr.k4_formula(p, alpha):>10} {ms:>6.0f}")

# Each 4-clique through 0 is a triangle in the subgraph induced on the
# connection set, so local triangle counts at 1 and g determine k4.
g = gr.build_graph(41)
print("q=41 local counts:", gr.k3_local(g, 1), gr.k3_local(g, g.group.g),
      "closed forms:", gr.k3_local_formula(41, 1), gr.k3_local_formula(41, 1, True))
print("k4 from local counts:", gr.k4_from_local(g))

# With n = 2q every connection element is odd, so the graph is bipartite.
d = gr.build_graph(17, doubled=True)
print("G*(34): edges", gr.edge_count(d), "k3", gr.k3_brute(d), "k4", gr.k4_brute(d))
