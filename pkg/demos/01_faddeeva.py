"""
The Doppler average of a Lorentzian line is a Faddeeva function.

We compare the double-precision kernel with the multiprecision reference
along a few awkward lines of the upper half-plane: close to the real axis,
across the branch crossovers, and far out where the asymptote takes over.
"""
import numpy as np

from coherent_mor.faddeeva import FRACTION_RADIUS, SERIES_RADIUS, w, w_reference

lines = {
    "near real axis (y = 1e-8)": np.linspace(-20, 20, 41) + 1e-8j,
    f"circle |z| = {SERIES_RADIUS}": SERIES_RADIUS * np.exp(1j * np.linspace(0.01, 3.13, 41)),
    f"circle |z| = {FRACTION_RADIUS}": FRACTION_RADIUS * np.exp(1j * np.linspace(0.01, 3.13, 41)),
    "far field": np.linspace(-1e3, 1e3, 41) + 5j,
}

for label, z in lines.items():
    ref = np.array([w_reference(v) for v in z])
    err = np.abs(w(z) - ref) / np.abs(ref)
    print(f"{label:28s} worst relative error {err.max():.2e}")

# Re W on the real axis is the Gaussian exp(-x^2): the Doppler profile itself
x = np.linspace(0, 3, 7)
print("\n   x    Re W(x + 0i)    exp(-x^2)")
for xi, v in zip(x, w(x + 1e-12j)):
    print(f"{xi:5.2f}  {v.real:.12f}  {np.exp(-xi * xi):.12f}")
