"""The explicit 1-leaky forcing sets for K_n x P_t, K_n x C_t and K_n x K_n,
drawn as grids and checked against every single-leak placement.
"""

from leakyforce import construct, is_leaky_forcing_set


def draw(cs):
    cols = cs.n if cs.t is None else cs.t
    for r in range(1, cs.n + 1):
        print("   " + " ".join("#" if (r, c) in cs.coords else "." for c in range(1, cols + 1)))


for family, n, t in [("kn_pt", 4, 6), ("kn_pt", 5, 8), ("kn_ct", 4, 6), ("kn_kn", 5, None), ("kn_pt", 3, 4)]:
    cs = construct(family, n, t)
    g, lab = cs.graph()
    rep = is_leaky_forcing_set(g, cs.mask(lab), 1)
    print(f"{family} n={n} t={t} [{cs.case_tag}] size={len(cs.coords)} 1-leaky={rep.passed}")
    draw(cs)
    if not rep.passed:
        # The n = 3 patterns do not survive every leak; show the blocking one.
        print("   blocked by leak at", lab.coords(rep.witness_leaks))
