"""
From a real cell to the dimensionless numbers used everywhere else.

A calcium cell at 500 K, 5 cm long with 1e12 atoms per cm^3, in 200 G and
under a 5 W/cm^2 control beam.
"""
import dataclasses

from coherent_mor import CALCIUM_CELL, lab_from_scaled, scaled_from_lab

scaled = scaled_from_lab(CALCIUM_CELL)
for name, (formula, value) in scaled.formulas.items():
    print(f"{name:8s} = {value:9.3f}    {formula}")

# what temperature would give a Doppler width of exactly 50?
env = dataclasses.replace(scaled.env, omega_d=50.0)
lab = lab_from_scaled(scaled.ctrl, env, CALCIUM_CELL)
print(f"\nomega_d = 50 needs T = {lab.temperature:.1f} K")
