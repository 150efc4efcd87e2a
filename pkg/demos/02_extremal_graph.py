"""The extremal cluster join: edge count, connectivity and its deficiency witness."""

# %%
from math import comb

from kcritical.factors import FactorParams, parity_audit, witness_certificate
from kcritical.families import ExtremalParams, build_G2, build_G3, build_G_star, edge_count_star
from kcritical.graph import is_k_connected
from kcritical.graph6 import graph6_str
from kcritical.harness import thresholds

b, k, delta = 1, 1, 2
report = thresholds(b, k, delta)
print("size threshold terms:", [str(t) for t in report.thm11_terms], "-> smallest n", report.smallest_n_thm11)
print("spectral threshold terms:", report.thm12_terms, "-> smallest n", report.smallest_n_thm12)

# %%
n = report.smallest_n_thm11
p = ExtremalParams(n, b, k, delta)
g = build_G_star(p)
print(f"G* on {n} vertices: parts {p.parts()}, graph6 {graph6_str(g)}")
print("edges:", g.e, "closed form:", edge_count_star(p), "=", comb(n - b * delta + b * k - 1, 2), "+", delta * p.singletons)
print("min degree", g.min_degree(), "| (k+1)-connected:", is_k_connected(g, k + 1))

# %%
# The hub separates b*delta - bk + 2 odd components, two more than allowed.
cert = witness_certificate(g, FactorParams(b, k), p.hub)
print(f"hub witness: o(G-S)={cert.t}, deficiency {cert.deficiency}, parity audit {parity_audit(g, FactorParams(b, k), cert)}")

# %%
# The comparison graphs used when the witness has a different size.
for s in (2, 3, 4):
    print(f"G2 s={s}: e={build_G2(n, b, k, s).e}")
print("G3 (n=13, delta=3, s=2): e =", build_G3(13, 1, 1, 2, 3).e)
