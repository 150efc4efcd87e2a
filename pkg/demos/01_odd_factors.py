"""Odd factors and k-criticality on small graphs, decided two ways."""

# %%
from kcritical.factors import FactorParams, deficiency, has_odd_factor, is_k_critical, is_k_critical_direct
from kcritical.graph import build_graph, complete, empty, join, union

# A [1,b]-odd factor keeps every vertex at odd degree <= b.
star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
print("K1,3 with b=1:", has_odd_factor(star, 1))
print("K1,3 with b=3:", has_odd_factor(star, 3).edges)

# %%
# K2 v (K3 u 2K1): deleting the two hub vertices leaves three odd pieces.
g = join(complete(2), union(complete(3), empty(2)))
p = FactorParams(b=1, k=1)
d, cert = deficiency(g, p)
print(f"max deficiency {d}, witness S={cert.witness}, o(G-S)={cert.t}")
print(cert.dumps())

# %%
# The criterion and the definition should always agree.
ok, _ = is_k_critical(g, p)
ok_direct, X = is_k_critical_direct(g, p)
print(f"criterion: {ok}, definition: {ok_direct} (G - {X} has no perfect matching)")

for n in (4, 5, 6):
    print(f"K{n}: 1-critical w.r.t. [1,1]-odd factors?", is_k_critical(complete(n), p)[0])
