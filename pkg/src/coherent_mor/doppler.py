"""
Velocity averages of the susceptibilities over a Maxwell-Boltzmann vapour.

In frequency space the shifted detuning delta_v is Gaussian around delta with
standard deviation omega_d.  For a sigma_+ control both averages reduce to
the Faddeeva function; :func:`avg_quadrature` integrates any single-velocity
response numerically and is the only route when G2 != 0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .faddeeva import w
from .susceptibility import SusceptibilityPair, s_general


class DegenerateWidthError(ValueError):
    """omega_d = 0: use the stationary-atom functions instead."""


class QuadratureError(ArithmeticError):
    """Numerical average failed to converge within the refinement budget."""


def _check_width(omega_d):
    if not omega_d > 0:
        raise DegenerateWidthError(
            f"Doppler width must be positive for averaging, got {omega_d!r}"
        )


def _prefactor(omega_d):
    return 1j * math.pi / math.sqrt(2 * math.pi * omega_d**2)


def avg_s_minus(atom, zeta, delta, omega_d):
    """<s-> = (i pi / sqrt(2 pi omega_d^2)) W((zeta - delta + i gamma_2) / (sqrt2 omega_d))."""
    _check_width(omega_d)
    delta = np.asarray(delta, dtype=float)
    arg = (zeta - delta + 1j * atom.gamma_2) / (math.sqrt(2) * omega_d)
    return _prefactor(omega_d) * w(arg)


def plus_argument(atom, G1, Delta, zeta, delta, omega_d):
    """Faddeeva argument of <s+>; the control enters as a complex light shift."""
    delta = np.asarray(delta, dtype=float)
    shift = abs(G1) ** 2 / (Delta + delta - 1j * atom.gamma_sum)
    return (1j * atom.gamma_1 - zeta - delta + shift) / (math.sqrt(2) * omega_d)


def avg_s_plus(atom, G1, Delta, zeta, delta, omega_d):
    """<s+> for a sigma_+ control of amplitude G1 and detuning Delta."""
    _check_width(omega_d)
    return _prefactor(omega_d) * w(plus_argument(atom, G1, Delta, zeta, delta, omega_d))


def avg_s_two_photon(atom, G1, zeta, delta, omega_d):
    """<s+> with the control held on two-photon resonance (Delta = -delta)."""
    _check_width(omega_d)
    delta = np.asarray(delta, dtype=float)
    return _prefactor(omega_d) * w(plus_argument(atom, G1, -delta, zeta, delta, omega_d))


@dataclass(frozen=True)
class QuadratureSettings:
    """Knobs for :func:`avg_quadrature`.

    ``hermite_nodes`` is the first Gauss-Hermite order tried; it is doubled up
    to ``hermite_max``.  If that does not settle, composite Gauss-Legendre
    panels of width ``resolution`` cover ``delta +- span * omega_d`` and are
    halved up to ``max_refinements`` times.
    """

    hermite_nodes: int = 128
    hermite_max: int = 256
    tol: float = 1e-10
    span: float = 8.0
    resolution: float = 1.0
    panel_order: int = 16
    max_refinements: int = 6


@lru_cache(maxsize=None)
def _hermite(n):
    return np.polynomial.hermite.hermgauss(n)


@lru_cache(maxsize=None)
def _legendre(n):
    return np.polynomial.legendre.leggauss(n)


def _gauss_hermite(s_fn, delta, omega_d, n):
    t, wt = _hermite(n)
    values = np.asarray(s_fn(delta + math.sqrt(2) * omega_d * t), dtype=complex)
    return np.dot(wt, values) / math.sqrt(math.pi)


def _composite(s_fn, delta, omega_d, panels, settings):
    x, wt = _legendre(settings.panel_order)
    lo = delta - settings.span * omega_d
    width = 2 * settings.span * omega_d / panels
    mids = lo + width * (np.arange(panels) + 0.5)
    nodes = (mids[:, None] + 0.5 * width * x[None, :]).ravel()
    weights = np.tile(0.5 * width * wt, panels)
    gauss = np.exp(-((nodes - delta) ** 2) / (2 * omega_d**2)) / math.sqrt(2 * math.pi * omega_d**2)
    values = np.asarray(s_fn(nodes), dtype=complex)
    return np.dot(weights * gauss, values)


def avg_quadrature(s_fn, delta, omega_d, settings=QuadratureSettings()):
    """Gaussian average of ``s_fn(delta_v)`` around ``delta`` (scalar delta).

    ``s_fn`` must accept an array of shifted detunings.  Converged once
    doubling the resolution moves the result by less than ``settings.tol``.
    """
    _check_width(omega_d)
    delta = float(delta)

    n = settings.hermite_nodes
    previous = _gauss_hermite(s_fn, delta, omega_d, n)
    while 2 * n <= settings.hermite_max:
        n *= 2
        current = _gauss_hermite(s_fn, delta, omega_d, n)
        if abs(current - previous) < settings.tol:
            return complex(current)
        previous = current

    panels = max(1, math.ceil(2 * settings.span * omega_d / settings.resolution))
    previous = _composite(s_fn, delta, omega_d, panels, settings)
    for _ in range(settings.max_refinements):
        panels *= 2
        current = _composite(s_fn, delta, omega_d, panels, settings)
        if abs(current - previous) < settings.tol:
            return complex(current)
        previous = current
    raise QuadratureError(
        f"average at delta={delta} not converged: last change {abs(current - previous):.3e}"
    )


def avg_general(atom, ctrl, zeta, delta, omega_d, settings=QuadratureSettings()):
    """Averages of the arbitrary-polarisation susceptibilities by quadrature.

    The two-photon detuning is held at ``Delta + delta`` for every velocity
    class (counter-propagating beams, k_p ~ k_c).
    """
    two_photon = ctrl.Delta + float(delta)

    def plus(dv):
        return s_general(atom, ctrl, zeta, dv, two_photon - dv).s_plus

    def minus(dv):
        return s_general(atom, ctrl, zeta, dv, two_photon - dv).s_minus

    return SusceptibilityPair(
        avg_quadrature(plus, delta, omega_d, settings),
        avg_quadrature(minus, delta, omega_d, settings),
        averaged=True,
        control_on=bool(ctrl.G1 or ctrl.G2),
    )
