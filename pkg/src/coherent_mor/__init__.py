"""
Magneto-optical rotation of a weak probe in a Doppler-broadened
j=0 <-> j=1 <-> j=0 vapour, with and without a coherent control field.
"""
from .doppler import (
    QuadratureSettings,
    avg_general,
    avg_quadrature,
    avg_s_minus,
    avg_s_plus,
    avg_s_two_photon,
)
from .faddeeva import w, w_reference
from .figures import FIGURES, figure_driver, preset
from .params import (
    CALCIUM_CELL,
    AtomParams,
    ControlParams,
    EnvParams,
    LabUnits,
    Parameters,
    ValidationError,
    lab_from_scaled,
    scaled_from_lab,
    validate,
)
from .rotation import (
    Regime,
    classify_regime,
    condition_residual,
    enhancement_eta,
    rotation_angle,
    solve_condition,
    transmission_ty,
)
from .scan import SpectrumRow, SweepSpec, column, evaluate, find_peaks, sweep
from .susceptibility import (
    s_general,
    s_no_control,
    s_reduced_minus,
    s_reduced_plus,
    s_two_photon_stationary,
    steady_state_oracle,
)

__version__ = "0.1.0"
