"""
Keeping the control on two-photon resonance while the probe is scanned.

With counter-propagating beams the two-photon detuning does not depend on
velocity.  For a strong control every velocity class sees the same
power-broadened line, so the Doppler average collapses onto the stationary
result near its centre.
"""
import numpy as np

from coherent_mor import AtomParams, avg_s_two_photon, s_two_photon_stationary
from coherent_mor.figures import two_photon_stationary_maxima

atom = AtomParams()
delta = np.array([-30.0, -20.0, -10.0, 0.0, 10.0])
for G1 in (20, 100):
    avg = avg_s_two_photon(atom, G1, 10.0, delta, 50.0)
    still = s_two_photon_stationary(atom, G1, 10.0, delta)
    print(f"G1 = {G1}: worst |<s+> - s+_stationary| / |s+| = {np.max(np.abs(avg - still) / np.abs(still)):.2e}")

maxima, centres = two_photon_stationary_maxima(20.0, 300.0, (0.0, 5.0, 10.0, 20.0))
print("\nstationary atoms, G1 = 20, alpha_l = 300")
for zeta, m, c in zip((0, 5, 10, 20), maxima, centres):
    print(f"  zeta = {zeta:2d}: max T_y = {m:.4f}, centre of T_y at delta = {c:6.2f}")
