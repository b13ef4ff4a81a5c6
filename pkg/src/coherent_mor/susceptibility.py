"""
Normalised probe susceptibilities s+ and s- of a single velocity class.

``s_plus`` is the response seen by the sigma_- probe component (|g> -> |1>)
and ``s_minus`` the one seen by sigma_+ (|g> -> |2>).  The physical
susceptibility is ``chi = alpha / (4 pi k_p) * s``.  All functions accept
numpy arrays for the detunings and broadcast.

:func:`steady_state_oracle` rebuilds the same numbers from the master
equation of the five-state system, without any of the algebra.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .params import ControlParams, EnvParams, violations


@dataclass(frozen=True)
class SusceptibilityPair:
    s_plus: complex | np.ndarray
    s_minus: complex | np.ndarray
    averaged: bool = False
    control_on: bool = False

    def swapped(self):
        return SusceptibilityPair(self.s_minus, self.s_plus, self.averaged, self.control_on)


def _coherences(atom, zeta, delta_v, two_photon):
    b1 = atom.gamma_1 + 1j * (delta_v + zeta)
    b2 = atom.gamma_2 + 1j * (delta_v - zeta)
    a = atom.gamma_sum + 1j * two_photon
    return b1, b2, a


def s_general(atom, ctrl, zeta, delta_v, Delta_v):
    """Both susceptibilities for arbitrary control polarisation (G1, G2).

    ``Delta_v`` is the control detuning seen by the atom; only the sum
    ``Delta_v + delta_v`` enters.  ``ctrl.Delta`` is ignored here.
    """
    delta_v = np.asarray(delta_v, dtype=float)
    b1, b2, a = _coherences(atom, zeta, delta_v, delta_v + np.asarray(Delta_v, dtype=float))
    g1 = abs(ctrl.G1) ** 2
    g2 = abs(ctrl.G2) ** 2
    s_plus = 1j * (g2 + b2 * a) / (g2 * b1 + b2 * (g1 + b1 * a))
    s_minus = 1j * (g1 + b1 * a) / (g1 * b2 + b1 * (g2 + b2 * a))
    control_on = bool(g1 or g2)
    return SusceptibilityPair(_scalar(s_plus), _scalar(s_minus), False, control_on)


def s_reduced_minus(atom, zeta, delta_v):
    """s- for a sigma_+ control (G2 = 0): a bare Lorentzian centred at +zeta."""
    delta_v = np.asarray(delta_v, dtype=float)
    return _scalar(1j / (atom.gamma_2 + 1j * (delta_v - zeta)))


def s_reduced_plus(atom, G1, Delta, delta, zeta, delta_v):
    """s+ dressed by a sigma_+ control of amplitude G1.

    ``Delta + delta`` is the velocity-independent two-photon detuning.
    """
    delta_v = np.asarray(delta_v, dtype=float)
    a = atom.gamma_sum + 1j * (np.asarray(Delta, dtype=float) + np.asarray(delta, dtype=float))
    b1 = atom.gamma_1 + 1j * (delta_v + zeta)
    return _scalar(1j * a / (abs(G1) ** 2 + b1 * a))


def s_no_control(atom, zeta, delta_v):
    delta_v = np.asarray(delta_v, dtype=float)
    s_plus = 1 / ((delta_v + zeta) - 1j * atom.gamma_1)
    s_minus = 1 / ((delta_v - zeta) - 1j * atom.gamma_2)
    return SusceptibilityPair(_scalar(s_plus), _scalar(s_minus), False, False)


def s_two_photon_stationary(atom, G1, zeta, delta):
    """s+ of a stationary atom with the control locked to Delta = -delta.

    A Lorentzian centred at delta = -zeta with half-width
    ``|G1|^2 / gamma_sum + gamma_1``.
    """
    delta = np.asarray(delta, dtype=float)
    width = abs(G1) ** 2 / atom.gamma_sum + atom.gamma_1
    return _scalar(1j / (width + 1j * (delta + zeta)))


def _scalar(x):
    return x[()] if isinstance(x, np.ndarray) and x.ndim == 0 else x


# --- master-equation oracle ------------------------------------------------

GROUND, PLUS, MINUS, ZERO, UPPER = range(5)  # |g>, |1>, |2>, |o>, |e>
_N = 5


class SingularSystemError(np.linalg.LinAlgError):
    """The steady-state equations have no unique solution."""


class NonlinearityWarning(UserWarning):
    """Halving the probe changed the extracted susceptibility too much."""


def hamiltonian(ctrl, zeta, delta_v, Delta_v, g1, g2):
    """Rotating-frame Hamiltonian (hbar = 1) in the basis g, 1, 2, o, e."""
    h = np.zeros((_N, _N), dtype=complex)
    h[UPPER, UPPER] = delta_v + Delta_v
    h[PLUS, PLUS] = delta_v + zeta
    h[MINUS, MINUS] = delta_v - zeta
    h[ZERO, ZERO] = delta_v  # undriven; its energy never reaches rho_1g, rho_2g
    couplings = [
        (PLUS, GROUND, g1),
        (MINUS, GROUND, g2),
        (UPPER, PLUS, ctrl.G1),
        (UPPER, MINUS, ctrl.G2),
    ]
    for i, j, amp in couplings:
        h[i, j] -= amp
        h[j, i] -= np.conj(amp)
    return h


def liouvillian(atom, h):
    """Superoperator acting on row-major vec(rho)."""
    eye = np.eye(_N)
    lv = -1j * (np.kron(h, eye) - np.kron(eye, h.T))
    lower = {ZERO: atom.gamma_o, PLUS: atom.gamma_1, MINUS: atom.gamma_2}
    upper = {ZERO: atom.Gamma_o, PLUS: atom.Gamma_1, MINUS: atom.Gamma_2}
    for i in (ZERO, PLUS, MINUS):
        for level, rate in ((UPPER, upper[i]), (i, lower[i])):
            proj = np.zeros((_N, _N))
            proj[level, level] = 1.0
            lv -= rate * (np.kron(proj, eye) + np.kron(eye, proj))
        lv[i * _N + i, UPPER * _N + UPPER] += 2 * upper[i]
        lv[GROUND * _N + GROUND, i * _N + i] += 2 * lower[i]
    return lv


def steady_state(lv):
    """Density matrix with L rho = 0 and unit trace."""
    a = lv.copy()
    b = np.zeros(_N * _N, dtype=complex)
    a[0, :] = 0
    a[0, [k * _N + k for k in range(_N)]] = 1
    b[0] = 1
    try:
        rho = np.linalg.solve(a, b)
    except np.linalg.LinAlgError as exc:
        raise SingularSystemError(str(exc)) from exc
    if not np.all(np.isfinite(rho)):
        raise SingularSystemError("non-finite steady state")
    return rho.reshape(_N, _N)


def _extract(atom, ctrl, zeta, delta_v, Delta_v, g):
    # one circular component at a time: the diagonal susceptibility
    rho = steady_state(liouvillian(atom, hamiltonian(ctrl, zeta, delta_v, Delta_v, g, 0)))
    s_plus = rho[PLUS, GROUND] / g
    rho = steady_state(liouvillian(atom, hamiltonian(ctrl, zeta, delta_v, Delta_v, 0, g)))
    s_minus = rho[MINUS, GROUND] / g
    return np.array([s_plus, s_minus])


def steady_state_oracle(atom, ctrl, zeta, delta_v, Delta_v, probe_amplitude=1e-4,
                        linearity_rtol=1e-6):
    """Susceptibilities from the steady state of the full master equation.

    The probe drives one arm at a time with amplitude ``g``.  The solve is
    repeated at ``g/2``; the two must agree to ``linearity_rtol`` (else a
    :class:`NonlinearityWarning` is issued) and are combined by Richardson
    extrapolation to remove the O(g^2) saturation term.
    """
    problems = [v for v in violations(atom, ControlParams(), EnvParams()) if "decay" in v]
    if problems:
        raise SingularSystemError("; ".join(problems))
    g = float(probe_amplitude)
    full = _extract(atom, ctrl, zeta, delta_v, Delta_v, g)
    half = _extract(atom, ctrl, zeta, delta_v, Delta_v, g / 2)
    change = np.max(np.abs(half - full) / np.maximum(np.abs(half), 1e-300))
    if change > linearity_rtol:
        warnings.warn(
            f"probe amplitude {g} is outside linear response (relative change {change:.2e})",
            NonlinearityWarning,
            stacklevel=2,
        )
    s_plus, s_minus = (4 * half - full) / 3
    control_on = bool(ctrl.G1 or ctrl.G2)
    return SusceptibilityPair(complex(s_plus), complex(s_minus), False, control_on)
