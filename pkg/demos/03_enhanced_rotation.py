"""
Control-induced rotation in a hot vapour (alpha_l = 300, zeta = 10).

Without control the two circular components see nearly the same Doppler
profile and little light leaks through the crossed analyser.  The control
burns a transparency window into one of them only, and T_y at line centre
goes up by three orders of magnitude.
"""
import numpy as np

from coherent_mor import column, find_peaks, preset, sweep

rows = sweep(preset("fig3"))
x = column(rows, "value")
print(" delta     T_y off      T_y on        eta     regime")
for row in rows[::100]:
    print(f"{row.value:6.0f}  {row.ty_off:10.3e}  {row.ty_on:10.3e}  {row.eta:9.3g}  {row.regime}")

centre = rows[int(np.argmin(np.abs(x)))]
print(f"\nenhancement at delta = 0: {centre.eta:.4g}")
for pos, height in find_peaks(rows):
    if height > 0.05:
        print(f"peak of T_y with control: {height:.3f} at delta = {pos:.2f}")
