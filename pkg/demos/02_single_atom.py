"""
A single velocity class: the control field opens a transparency window.

The sigma_- probe arm (s+) shares the upper level with the control, so it
splits into an Autler-Townes doublet; the sigma_+ arm (s-) is a bare line.
The closed forms are checked against a brute-force steady state of the
five-level master equation.
"""
import numpy as np

from coherent_mor import AtomParams, ControlParams, s_general, steady_state_oracle

atom = AtomParams()
zeta = 0.0
print(" delta   Im s+ (G1=0)  Im s+ (G1=10)   Im s-")
for delta in np.linspace(-15, 15, 13):
    bare = s_general(atom, ControlParams(), zeta, delta, 0.0)
    dressed = s_general(atom, ControlParams(G1=10), zeta, delta, 0.0)
    print(f"{delta:6.1f}   {bare.s_plus.imag:10.5f}   {dressed.s_plus.imag:10.5f}   {dressed.s_minus.imag:8.5f}")

ctrl = ControlParams(G1=10, G2=4 + 3j)
closed = s_general(atom, ctrl, 2.0, 1.5, -0.5)
oracle = steady_state_oracle(atom, ctrl, 2.0, 1.5, -0.5)
print("\nboth control arms driven, zeta = 2:")
print(f"  closed form    s+ = {closed.s_plus:.12f}  s- = {closed.s_minus:.12f}")
print(f"  master eq.     s+ = {oracle.s_plus:.12f}  s- = {oracle.s_minus:.12f}")
