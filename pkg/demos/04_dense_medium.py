"""
A ten times denser vapour (alpha_l = 3000, zeta = 20).

Four regions show up along the probe detuning: dichroic enhancement at line
centre, complete absorption of both components on the wings of the Doppler
profile, suppression by the control, and a far-detuned window where the
dispersive phase difference alone produces a large signal.
"""
from coherent_mor import evaluate, preset

spec = preset("fig4")
no_field = spec.with_(field=False)
print(" delta     T_y off     T_y on   T_y on (B=0)   regime")
for delta in (-300.0, -248.3, -200.0, -150.0, -75.0, 0.0, 75.0, 150.0, 250.0):
    row = evaluate(spec, [delta])[0]
    bare = evaluate(no_field, [delta])[0]
    print(f"{delta:7.1f}  {row.ty_off:9.3e}  {row.ty_on:9.3e}  {bare.ty_on:11.3e}   {row.regime}")
