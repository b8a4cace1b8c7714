"""Build K_4 x P_6, color a small set, and watch the forcing rounds.

Run with ``python3 demos/01_products_and_closure.py``.
"""

from leakyforce import closure, complete_graph, construct_b1_kn_pt, direct_product, path_graph

g, lab = direct_product(complete_graph(4), path_graph(6))
print(f"K4 x P6: {g.vertex_count} vertices, {g.edge_count} edges")

# A vertex (i, j) is adjacent to (i', j') when i != i' and |j - j'| = 1, so
# each vertex sees 3 vertices per neighboring column.
print("neighbors of (1,2):", sorted(lab.to_coord(v) for v in g.neighbors(lab.to_index(1, 2))))

cs = construct_b1_kn_pt(4, 6)
chron = closure(g, cs.mask(lab))
for forcer, forced, rnd in chron.events:
    print(f"round {rnd}: {lab.to_coord(forcer)} -> {lab.to_coord(forced)}")
print("stalled:", chron.stalled)

# Mark (1,6) as a leak: it may still turn blue, but it cannot force.
leak = lab.mask([(1, 6)])
chron = closure(g, cs.mask(lab), leak)
print(f"with leak (1,6): {chron.rounds} rounds, stalled={chron.stalled}")
