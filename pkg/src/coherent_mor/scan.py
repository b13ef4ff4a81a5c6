"""
One-dimensional parameter sweeps over delta, zeta or G1.

Each grid point yields a :class:`SpectrumRow` holding the three averaged
susceptibilities that are usually plotted (both components without control,
the sigma_- one with control), T_y with and without control, the enhancement
and the rotation angle.  Evaluation is vectorised; ``workers > 1`` splits the
grid into chunks evaluated on a thread pool and reassembled in scan order.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from . import doppler
from .params import Parameters, validate
from .rotation import (
    classify_regime,
    enhancement_array,
    rotation_angle,
    transmission_ty,
)
from .susceptibility import s_general, s_reduced_minus, s_reduced_plus

VARIABLES = ("delta", "zeta", "G1")


class SweepError(ValueError):
    """Malformed sweep specification."""


class KernelError(ArithmeticError):
    """A numerical kernel failed at a particular scan value."""

    def __init__(self, variable, value, cause):
        self.variable = variable
        self.value = value
        self.cause = cause
        super().__init__(f"{variable}={value!r}: {type(cause).__name__}: {cause}")


@dataclass(frozen=True)
class SweepSpec:
    """A single-variable scan.

    ``delta`` is the fixed probe detuning used when the scan variable is not
    delta.  ``control=False`` drops the control field from the "with control"
    columns, ``field=False`` forces zeta = 0 and ``two_photon=True`` locks the
    control detuning to ``Delta = -delta`` at every point.
    """

    variable: str = "delta"
    lo: float = -300.0
    hi: float = 300.0
    points: int = 2001
    params: Parameters = field(default_factory=Parameters)
    delta: float = 0.0
    control: bool = True
    two_photon: bool = False
    field: bool = True

    def __post_init__(self):
        if self.variable not in VARIABLES:
            raise SweepError(f"scan variable must be one of {VARIABLES}, got {self.variable!r}")
        if not self.lo < self.hi:
            raise SweepError(f"empty scan range [{self.lo}, {self.hi}]")
        if int(self.points) != self.points or self.points < 2:
            raise SweepError(f"need at least 2 points, got {self.points!r}")
        if not self.field and self.variable == "zeta":
            raise SweepError("cannot scan zeta with the magnetic field switched off")
        p = self.params
        validate(p.atom, p.ctrl, p.env)

    def grid(self):
        return np.linspace(self.lo, self.hi, int(self.points))

    def with_(self, **changes):
        return replace(self, **changes)


@dataclass(frozen=True)
class SpectrumRow:
    value: float
    s_plus_0: complex
    s_minus_0: complex
    s_plus_c: complex
    ty_off: float
    ty_on: float
    eta: float
    theta: float
    regime: str
    s_minus_c: complex | None = None
    theta_approximate: bool = False

    @property
    def minus_with_control(self):
        return self.s_minus_0 if self.s_minus_c is None else self.s_minus_c


def _axes(spec, values):
    p = spec.params
    n = values.shape
    delta = np.full(n, spec.delta, dtype=float)
    zeta = np.full(n, p.env.zeta if spec.field else 0.0, dtype=float)
    g1 = np.full(n, p.ctrl.G1, dtype=complex)
    if spec.variable == "delta":
        delta = values.astype(float)
    elif spec.variable == "zeta":
        zeta = values.astype(float)
    else:
        g1 = values.astype(complex)
    if not spec.control:
        g1 = np.zeros(n, dtype=complex)
    Delta = -delta if spec.two_photon else np.full(n, p.ctrl.Delta, dtype=float)
    return delta, zeta, g1, Delta


def _susceptibilities(spec, values):
    """(s+_0, s-_0, s+_c, s-_c) arrays at the given scan values."""
    p = spec.params
    atom, wd = p.atom, p.env.omega_d
    delta, zeta, g1, Delta = _axes(spec, values)
    g2 = p.ctrl.G2 if spec.control else 0

    if g2 == 0:
        if wd > 0:
            s_minus_0 = doppler.avg_s_minus(atom, zeta, delta, wd)
            s_plus_0 = doppler.avg_s_plus(atom, 0.0, Delta, zeta, delta, wd)
            s_plus_c = doppler.avg_s_plus(atom, g1, Delta, zeta, delta, wd)
        else:
            s_minus_0 = s_reduced_minus(atom, zeta, delta)
            s_plus_0 = s_reduced_plus(atom, 0.0, Delta, delta, zeta, delta)
            s_plus_c = s_reduced_plus(atom, g1, Delta, delta, zeta, delta)
        s_minus_c = s_minus_0
        return [np.atleast_1d(x) for x in (s_plus_0, s_minus_0, s_plus_c, s_minus_c)]

    out = np.empty((4, values.size), dtype=complex)
    for i in range(values.size):
        ctrl_on = replace(p.ctrl, G1=g1[i], Delta=Delta[i])
        ctrl_off = replace(ctrl_on, G1=0, G2=0)
        for k, ctrl in ((0, ctrl_off), (2, ctrl_on)):
            if wd > 0:
                pair = doppler.avg_general(atom, ctrl, zeta[i], delta[i], wd)
            else:
                pair = s_general(atom, ctrl, zeta[i], delta[i], ctrl.Delta)
            out[k], out[k + 1] = pair.s_plus, pair.s_minus
    return list(out)


def _rows(spec, values):
    alpha_l = spec.params.env.alpha_l
    s_plus_0, s_minus_0, s_plus_c, s_minus_c = _susceptibilities(spec, values)
    ty_off = np.atleast_1d(transmission_ty(s_plus_0, s_minus_0, alpha_l))
    ty_on = np.atleast_1d(transmission_ty(s_plus_c, s_minus_c, alpha_l))
    eta = np.atleast_1d(enhancement_array(ty_on, ty_off))
    theta, approx = rotation_angle(s_plus_c, s_minus_c, alpha_l)
    theta = np.atleast_1d(theta)
    approx = np.atleast_1d(approx)
    separate_minus = spec.params.ctrl.G2 != 0 and spec.control
    rows = []
    for i, x in enumerate(values):
        call = classify_regime(s_plus_c[i], s_minus_c[i], alpha_l)
        rows.append(
            SpectrumRow(
                value=float(x.real) if spec.variable != "G1" else float(abs(x)),
                s_plus_0=complex(s_plus_0[i]),
                s_minus_0=complex(s_minus_0[i]),
                s_plus_c=complex(s_plus_c[i]),
                ty_off=float(ty_off[i]),
                ty_on=float(ty_on[i]),
                eta=float(eta[i]),
                theta=float(theta[i]),
                regime=call.regime.value,
                s_minus_c=complex(s_minus_c[i]) if separate_minus else None,
                theta_approximate=bool(approx[i]),
            )
        )
    return rows


def _evaluate_chunk(spec, values):
    try:
        return _rows(spec, values)
    except (ArithmeticError, ValueError):
        # locate the first offending scan value
        for x in values:
            try:
                _rows(spec, np.array([x]))
            except (ArithmeticError, ValueError) as exc:
                raise KernelError(spec.variable, float(np.real(x)), exc) from exc
        raise


def evaluate(spec, values, workers=1):
    """Rows at arbitrary scan values (the grid of ``spec`` is ignored)."""
    values = np.atleast_1d(np.asarray(values, dtype=float))
    if workers <= 1 or values.size < 2 * workers:
        return _evaluate_chunk(spec, values)
    chunks = np.array_split(values, workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(lambda c: _evaluate_chunk(spec, c), chunks)
        return [row for part in parts for row in part]


def sweep(spec, workers=1):
    """Ordered rows on the uniform grid of ``spec``."""
    return evaluate(spec, spec.grid(), workers=workers)


def column(rows, name):
    """One attribute of every row as a numpy array."""
    return np.array([getattr(r, name) for r in rows])


def find_peaks(rows, name="ty_on"):
    """Local maxima of a column, refined by a parabola through neighbours.

    Returns ``[(x, height), ...]`` in scan order.  Plateaus report their
    first point.  Needs a uniform grid.
    """
    if len(rows) < 3:
        return []
    x = column(rows, "value").astype(float)
    y = column(rows, name).astype(float)
    return peaks_of(x, y)


def peaks_of(x, y):
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    found = []
    for i in range(1, len(y) - 1):
        left, mid, right = y[i - 1], y[i], y[i + 1]
        if not (mid > left and mid >= right):
            continue
        curvature = left - 2 * mid + right
        if curvature < 0:
            offset = 0.5 * (left - right) / curvature
            height = mid - 0.25 * (left - right) * offset
        else:
            offset, height = 0.0, mid
        step = x[i + 1] - x[i] if offset >= 0 else x[i] - x[i - 1]
        found.append((float(x[i] + offset * step), float(height)))
    return found
