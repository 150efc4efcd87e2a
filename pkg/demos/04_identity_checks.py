"""Exact point-evaluation checks of the polynomial identities behind both bounds."""

# %%
from kcritical import identities as I
from kcritical import poly
from kcritical.cli import run_identity_suite
from kcritical.spectral import char_cubic

for name, counts in run_identity_suite().items():
    print(f"{name:24s} {counts}")

# %%
# The size-case cubic g at x = k+1 collapses to a linear expression in n.
n, b, k, d = 13, 1, 1, 2
print("g(k+1) =", poly.evaluate(I.g_coeffs(n, b, k, d), k + 1), "=", 2 * n + b * k - b * d - 2 * d - 2)

# %%
# phi_B3 - phi_B* against (delta - s) g1 with its stated constant: off by 2(s - delta).
n, b, k, d, s = 13, 1, 1, 3, 2
diff = [x - y for x, y in zip(char_cubic("B3", n, b, k, d, s).coeffs, char_cubic("Bstar", n, b, k, d).coeffs)]
for x in range(4):
    residual = poly.evaluate(diff, x) - (d - s) * poly.evaluate(I.g1_coeffs(n, b, k, d, s), x)
    print(f"x={x}: residual {residual}")
print("with the constant lowered by 2:", I.verify_identity_4_8(n, b, k, d, s, corrected=True))
