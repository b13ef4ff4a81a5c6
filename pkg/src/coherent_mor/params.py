"""
Parameter bundles for the j=0 <-> j=1 <-> j=0 ladder, in scaled units.

Every frequency is measured in units of the reference half-rate gamma of the
lower transition, so the normalisation constant that multiplies the
susceptibilities is exactly 1.  Laboratory quantities only appear in
:class:`LabUnits`, and :func:`scaled_from_lab` / :func:`lab_from_scaled`
translate between the two.

Level labels follow the usual picture: ``g`` is the j=0 ground state,
``1``, ``o`` and ``2`` are the m=+1, 0, -1 sublevels of j=1 and ``e`` is the
upper j=0 state.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import NamedTuple

from scipy.constants import atomic_mass, c, epsilon_0, hbar, k as k_B
from scipy.constants import physical_constants

MU_B = physical_constants["Bohr magneton"][0]
GAUSS = 1e-4  # tesla
W_PER_CM2 = 1e4  # W/m^2


class ValidationError(ValueError):
    """Raised when one or more parameter invariants are violated.

    ``violations`` holds one message per broken invariant.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


@dataclass(frozen=True)
class AtomParams:
    """Decay half-rates in units of gamma.

    ``gamma_*`` are the lower-transition rates (|i> -> |g>), ``Gamma_*`` the
    upper ones (|e> -> |i>); the physical decay rates are twice these.
    """

    gamma_1: float = 1.0
    gamma_2: float = 1.0
    gamma_o: float = 1.0
    Gamma_1: float = 1.0
    Gamma_2: float = 1.0
    Gamma_o: float = 1.0

    @classmethod
    def uniform(cls, lower=1.0, upper=1.0):
        """All lower rates equal to ``lower`` and all upper rates to ``upper``."""
        return cls(lower, lower, lower, upper, upper, upper)

    @property
    def gamma_sum(self):
        """Total decay of the two-photon coherence rho_eg."""
        return self.Gamma_o + self.Gamma_1 + self.Gamma_2


@dataclass(frozen=True)
class ControlParams:
    """Control Rabi amplitudes G1 (|1><->|e>), G2 (|2><->|e>) and detuning Delta.

    ``G2 == 0`` is the sigma_+ polarised control used by every closed-form
    Doppler average.
    """

    G1: complex = 0.0
    G2: complex = 0.0
    Delta: float = 0.0

    @property
    def sigma_plus_only(self):
        return self.G2 == 0


@dataclass(frozen=True)
class EnvParams:
    """Zeeman half-splitting, Doppler width and line-centre optical depth."""

    zeta: float = 0.0
    omega_d: float = 0.0
    alpha_l: float = 0.0


@dataclass(frozen=True)
class ProbePoint:
    """Probe detuning delta = w_og - w_p and its velocity-shifted value."""

    delta: float
    delta_v: float | None = None

    @classmethod
    def moving(cls, delta, kv):
        return cls(delta, delta + kv)

    @property
    def shifted(self):
        return self.delta if self.delta_v is None else self.delta_v


@dataclass(frozen=True)
class LabUnits:
    """Laboratory description of a vapour cell (SI unless noted).

    ``field_gauss`` is in gauss and ``control_intensity`` in W/cm^2.
    ``gamma`` is the reference half-rate in s^-1 that becomes the frequency
    unit. ``d`` and ``D`` are the reduced dipoles of the probe and control
    transitions in C m.
    """

    temperature: float
    mass: float
    cell_length: float
    density: float
    field_gauss: float
    control_intensity: float
    wavelength: float
    d: float
    D: float
    gamma: float


@dataclass(frozen=True)
class Parameters:
    """A validated (atom, control, environment) bundle."""

    atom: AtomParams = field(default_factory=AtomParams)
    ctrl: ControlParams = field(default_factory=ControlParams)
    env: EnvParams = field(default_factory=EnvParams)

    def with_env(self, **changes):
        return replace(self, env=replace(self.env, **changes))

    def with_ctrl(self, **changes):
        return replace(self, ctrl=replace(self.ctrl, **changes))


def _finite(x):
    return math.isfinite(abs(complex(x)))


def violations(atom, ctrl, env):
    """List every broken invariant of the three bundles (empty if none)."""
    out = []
    for name in ("gamma_1", "gamma_2", "gamma_o"):
        v = getattr(atom, name)
        if not (_finite(v) and v > 0):
            out.append(f"lower decay must be positive: {name}={v!r}")
    for name in ("Gamma_1", "Gamma_2", "Gamma_o"):
        v = getattr(atom, name)
        if not (_finite(v) and v > 0):
            out.append(f"upper decay must be positive: {name}={v!r}")
    for name in ("G1", "G2", "Delta"):
        v = getattr(ctrl, name)
        if not _finite(v):
            out.append(f"control parameter must be finite: {name}={v!r}")
    if not _finite(env.zeta):
        out.append(f"zeeman splitting must be finite: zeta={env.zeta!r}")
    if not (_finite(env.omega_d) and env.omega_d >= 0):
        out.append(f"doppler width must be non-negative: omega_d={env.omega_d!r}")
    if not (_finite(env.alpha_l) and env.alpha_l >= 0):
        out.append(f"optical depth must be non-negative: alpha_l={env.alpha_l!r}")
    return out


def validate(atom, ctrl, env):
    """Return a :class:`Parameters` bundle or raise :class:`ValidationError`."""
    problems = violations(atom, ctrl, env)
    if problems:
        raise ValidationError(problems)
    return Parameters(atom, ctrl, env)


class ScaledParameters(NamedTuple):
    atom: AtomParams
    ctrl: ControlParams
    env: EnvParams
    formulas: dict


def _check_lab(lab):
    bad = [
        f"{name} must be positive, got {getattr(lab, name)!r}"
        for name in ("temperature", "mass", "cell_length", "wavelength", "gamma")
        if not getattr(lab, name) > 0
    ]
    bad += [
        f"{name} must be non-negative, got {getattr(lab, name)!r}"
        for name in ("density", "control_intensity", "d", "D")
        if not getattr(lab, name) >= 0
    ]
    if not math.isfinite(lab.field_gauss):
        bad.append(f"field_gauss must be finite, got {lab.field_gauss!r}")
    if bad:
        raise ValidationError(bad)


def doppler_width(lab):
    """omega_D in s^-1: w_og sqrt(k_B T / M c^2)."""
    w_og = 2 * math.pi * c / lab.wavelength
    return w_og * math.sqrt(k_B * lab.temperature / (lab.mass * c**2))


def scaled_from_lab(lab):
    """Map laboratory units onto dimensionless (atom, ctrl, env) bundles.

    The optical depth uses the SI form ``k l |d|^2 n / (eps0 hbar gamma)``,
    the control amplitude is ``D E / hbar`` with ``E = sqrt(I / (2 c eps0))``
    (field written as E e^{-iwt} + c.c.), and ``2 zeta = mu_B B / hbar``.
    """
    _check_lab(lab)
    k_p = 2 * math.pi / lab.wavelength
    omega_d = doppler_width(lab) / lab.gamma
    alpha_l = k_p * lab.cell_length * lab.d**2 * lab.density / (epsilon_0 * hbar * lab.gamma)
    zeta = MU_B * lab.field_gauss * GAUSS / (2 * hbar) / lab.gamma
    e_field = math.sqrt(lab.control_intensity * W_PER_CM2 / (2 * c * epsilon_0))
    g1 = lab.D * e_field / hbar / lab.gamma

    formulas = {
        "omega_d": ("(2 pi c / lambda) sqrt(k_B T / M c^2) / gamma", omega_d),
        "alpha_l": ("(2 pi / lambda) l d^2 n / (eps0 hbar gamma)", alpha_l),
        "zeta": ("mu_B B / (2 hbar gamma)", zeta),
        "G1": ("D sqrt(I / (2 c eps0)) / (hbar gamma)", g1),
    }
    return ScaledParameters(
        AtomParams(),
        ControlParams(G1=g1),
        EnvParams(zeta=zeta, omega_d=omega_d, alpha_l=alpha_l),
        formulas,
    )


def lab_from_scaled(ctrl, env, template):
    """Inverse of :func:`scaled_from_lab`.

    Recovers temperature, density, field and control intensity; species data
    (mass, wavelength, dipoles, gamma, cell length) come from ``template``.
    """
    _check_lab(template)
    t = template
    w_og = 2 * math.pi * c / t.wavelength
    temperature = (env.omega_d * t.gamma / w_og) ** 2 * t.mass * c**2 / k_B
    k_p = 2 * math.pi / t.wavelength
    if t.d > 0:
        density = env.alpha_l * epsilon_0 * hbar * t.gamma / (k_p * t.cell_length * t.d**2)
    else:
        density = t.density
    field_gauss = 2 * hbar * t.gamma * env.zeta / MU_B / GAUSS
    if t.D > 0:
        e_field = abs(ctrl.G1) * hbar * t.gamma / t.D
        intensity = 2 * c * epsilon_0 * e_field**2 / W_PER_CM2
    else:
        intensity = t.control_intensity
    return replace(
        t,
        temperature=temperature,
        density=density,
        field_gauss=field_gauss,
        control_intensity=intensity,
    )


# 40Ca resonance line at 422.67 nm.  The linewidth and both dipoles are
# effective values: they place a 5 cm, 500 K cell with 1e12 cm^-3 atoms,
# 200 G and 5 W/cm^2 near omega_d = 50, alpha_l = 300, 2 zeta = 20, G1 = 100.
CALCIUM_CELL = LabUnits(
    temperature=500.0,
    mass=39.962591 * atomic_mass,
    cell_length=0.05,
    density=1e18,
    field_gauss=200.0,
    control_intensity=5.0,
    wavelength=422.6727e-9,
    d=5.89e-30,
    D=3.16e-28,
    gamma=9.2e7,
)
