"""Seeded random sweeps near the extremal graph, then tightness at the threshold."""

# %%
from collections import Counter

from kcritical.harness import sweep, tightness

for mode, n in (("size", 13), ("spectral", 11)):
    verdicts = sweep(1, 1, 2, n, mode, sample_count=100, seed=42)
    print(mode, n, dict(Counter(v.classification for v in verdicts)))
    extremal = next(v for v in verdicts if v.classification == "extremal-equality")
    print("  an extremal sample:", extremal.graph6, "witness", extremal.certificate.witness)

# %%
for b, k, delta in [(1, 1, 2), (3, 1, 3), (3, 2, 4), (5, 1, 2)]:
    for mode in ("size", "spectral"):
        t = tightness(b, k, delta, mode)
        print(f"b={b} k={k} delta={delta} {mode:8s} n={t['n']:3d} {t['classification']} "
              f"hub deficiency {t['hubDeficiency']}" + (f" rho gap {t['rhoGap']:.1e}" if mode == "spectral" else ""))
