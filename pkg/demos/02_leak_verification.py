"""Adversarial leak checks: a set is l-leaky forcing only if no placement of
l leaks can stall it.
"""

from leakyforce import GridLabeling, cycle_graph, is_leaky_forcing_set, is_zero_forcing_set

c6 = cycle_graph(6)
pair = 0b11
print("C6, two adjacent vertices, zero forcing:", is_zero_forcing_set(c6, pair))
for ell in (1, 2):
    rep = is_leaky_forcing_set(c6, pair, ell)
    print(f"  ell={ell}: passed={rep.passed}, placements checked={rep.placements_checked}")

# With one leak the adjacent pair still works: a leak on one colored
# vertex leaves the other free to force around the cycle in its direction,
# and the far side is reached from the other end.  Two leaks on the pair
# stop everything.
rep = is_leaky_forcing_set(c6, pair, 2)
lab = GridLabeling(1, 6)
print("  stalling placement:", [c for _, c in lab.coords(rep.witness_leaks)])
