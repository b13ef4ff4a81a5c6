"""
What a crossed polariser sees: output field, T_y, rotation angle, enhancement,
regime labels and the maximal-rotation condition.

Inputs are (averaged or stationary) susceptibilities; everything broadcasts
over numpy arrays.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import bisect

UNDERFLOW = 1e-300


@dataclass(frozen=True)
class RotationResult:
    t_y: float
    theta: float
    eta: float
    out_plus: complex
    out_minus: complex
    approximate: bool = False


def output_field(s_plus, s_minus, alpha_l):
    """Circular amplitudes after the cell for a unit x-polarised input."""
    s_plus = np.asarray(s_plus, dtype=complex)
    s_minus = np.asarray(s_minus, dtype=complex)
    scale = 1 / math.sqrt(2)
    out_plus = scale * np.exp(0.5j * alpha_l * s_plus)
    out_minus = scale * np.exp(0.5j * alpha_l * s_minus)
    return _scalar(out_plus), _scalar(out_minus)


def transmission_ty(s_plus, s_minus, alpha_l):
    """Fraction of the input intensity passed by a crossed (y) analyser."""
    out_plus, out_minus = output_field(s_plus, s_minus, alpha_l)
    # E_y = (E+ - E-) i / sqrt2 in the circular basis (x +- iy)/sqrt2
    return _scalar(0.5 * np.abs(np.asarray(out_plus) - np.asarray(out_minus)) ** 2)


def rotation_angle(s_plus, s_minus, alpha_l, absorption_limit=0.3):
    """Dispersive rotation angle (alpha_l / 4) Re(s- - s+), in radians.

    Returns ``(theta, approximate)``; ``approximate`` is set where
    ``alpha_l * Im s`` reaches ``absorption_limit`` for either component, i.e.
    where absorption is too strong for the small-angle picture.
    """
    s_plus = np.asarray(s_plus, dtype=complex)
    s_minus = np.asarray(s_minus, dtype=complex)
    theta = 0.25 * alpha_l * (s_minus - s_plus).real
    approximate = (alpha_l * np.maximum(s_plus.imag, s_minus.imag)) >= absorption_limit
    return _scalar(theta), _scalar(approximate)


class UndefinedRatio(ArithmeticError):
    """Both transmissions underflowed; the enhancement has no meaning."""


def enhancement_eta(ty_on, ty_off):
    """T_y with control over T_y without it.

    A vanishing denominator gives ``inf``; if the numerator vanishes too,
    :class:`UndefinedRatio` is raised.
    """
    if ty_off < UNDERFLOW:
        if ty_on < UNDERFLOW:
            raise UndefinedRatio(f"T_y on={ty_on!r}, off={ty_off!r}")
        return math.inf
    return ty_on / ty_off


def enhancement_array(ty_on, ty_off):
    """Vectorised :func:`enhancement_eta`; undefined ratios become ``nan``."""
    ty_on = np.asarray(ty_on, dtype=float)
    ty_off = np.asarray(ty_off, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        eta = ty_on / ty_off
    tiny_off = ty_off < UNDERFLOW
    eta = np.where(tiny_off, np.where(ty_on < UNDERFLOW, np.nan, np.inf), eta)
    return _scalar(eta)


class Regime(str, enum.Enum):
    NULL = "NULL"
    DICHROIC = "DICHROIC"
    BIREFRINGENT = "BIREFRINGENT"
    ATTENUATED = "ATTENUATED"


@dataclass(frozen=True)
class RegimeThresholds:
    """Operational meaning of the qualitative words.

    ``large``/``small`` bound the single-pass attenuation alpha_l Im s / 2;
    ``equal`` is a relative tolerance.
    """

    large: float = 3.0
    small: float = 0.3
    equal: float = 0.05


@dataclass(frozen=True)
class RegimeCall:
    regime: Regime
    attenuation_plus: float
    attenuation_minus: float
    phase_difference: float
    relative_difference: float


def classify_regime(s_plus, s_minus, alpha_l, thresholds=RegimeThresholds()):
    """Label one (s+, s-) pair.

    Order of tests: NULL when the pair is equal within ``equal``; ATTENUATED
    when both attenuations exceed ``large``; BIREFRINGENT when both are below
    ``small`` and the dispersive phase difference outweighs the absorption
    difference; DICHROIC otherwise.
    """
    s_plus = complex(s_plus)
    s_minus = complex(s_minus)
    th = thresholds
    a_plus = 0.5 * alpha_l * s_plus.imag
    a_minus = 0.5 * alpha_l * s_minus.imag
    phase = 0.5 * alpha_l * (s_minus - s_plus).real
    scale = max(abs(s_plus), abs(s_minus))
    rel = abs(s_plus - s_minus) / scale if scale > 0 else 0.0

    if rel <= th.equal or alpha_l == 0:
        regime = Regime.NULL
    elif a_plus > th.large and a_minus > th.large:
        regime = Regime.ATTENUATED
    elif a_plus < th.small and a_minus < th.small and abs(phase) > abs(a_plus - a_minus):
        regime = Regime.BIREFRINGENT
    else:
        regime = Regime.DICHROIC
    return RegimeCall(regime, a_plus, a_minus, phase, rel)


class NoRootError(ValueError):
    """The maximal-rotation residual never changes sign on the scan."""


def condition_residual(s_plus, s_minus, alpha_l, n=0):
    """(alpha_l / 2) Re(s- - s+) - (2n + 1) pi."""
    s_plus = np.asarray(s_plus, dtype=complex)
    s_minus = np.asarray(s_minus, dtype=complex)
    return _scalar(0.5 * alpha_l * (s_minus - s_plus).real - (2 * n + 1) * math.pi)


def solve_condition(pair_fn, grid, alpha_l, n=0, xtol=1e-6):
    """Roots of the maximal-rotation residual along one scan variable.

    ``pair_fn(x)`` returns ``(s_plus, s_minus)`` for an array of scan values.
    Sign changes between neighbouring grid points are refined by bisection
    to ``xtol``.  Roots come back sorted.
    """
    grid = np.asarray(grid, dtype=float)

    def residual(x):
        s_plus, s_minus = pair_fn(x)
        return condition_residual(s_plus, s_minus, alpha_l, n)

    values = np.asarray(residual(grid), dtype=float)
    roots = []
    for i in np.flatnonzero(values == 0):
        roots.append(float(grid[i]))
    crossing = np.flatnonzero(np.sign(values[:-1]) * np.sign(values[1:]) < 0)
    for i in crossing:
        f = lambda x: float(residual(np.array([x]))[0])  # noqa: E731
        roots.append(bisect(f, grid[i], grid[i + 1], xtol=xtol))
    if not roots:
        raise NoRootError(
            f"residual keeps one sign on [{grid[0]}, {grid[-1]}] for n={n}"
        )
    return sorted(roots)


def _scalar(x):
    return x[()] if isinstance(x, np.ndarray) and x.ndim == 0 else x
