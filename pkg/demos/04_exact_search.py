"""Exact minimum l-leaky forcing numbers by size-increasing exhaustive search."""

from leakyforce import complete_graph, direct_product, hypercube_graph, min_leaky_forcing_number, path_graph

for t in range(2, 6):
    g, lab = direct_product(complete_graph(3), path_graph(t))
    z = [min_leaky_forcing_number(g, ell).value for ell in (0, 1)]
    print(f"K3 x P{t}: Z0={z[0]} Z1={z[1]}")

for d in (3, 4):
    r = min_leaky_forcing_number(hypercube_graph(d), d - 1)
    print(f"Z{d - 1}(Q{d}) = {r.value} after {r.subsets_tested} subsets, {r.wall_time:.2f}s")

# A tight budget returns no value but says how far the search got.
g, _ = direct_product(complete_graph(4), complete_graph(4))
r = min_leaky_forcing_number(g, 1, max_subsets=5000)
print(f"K4 x K4 with budget: value={r.value}, sizes ruled out through {r.sizes_exhausted}")
