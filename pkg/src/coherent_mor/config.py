"""
INI-style run configuration.

Sections and keys (all optional)::

    [atom]     gamma_1 gamma_2 gamma_o Gamma_1 Gamma_2 Gamma_o
    [control]  G1 G2 Delta                 (G1, G2 may be complex, e.g. 30+40j)
    [env]      zeta omega_d alpha_l
    [lab]      temperature mass_u cell_length density field_gauss
               control_intensity wavelength d D gamma
    [sweep]    variable lo hi points delta control two_photon field n

Keys are case sensitive.  A key missing from the file falls back to the
preset (if one was chosen) or to the documented default; defaults are
reported through the ``notes`` list so the caller can echo them on stderr.
"""
from __future__ import annotations

import configparser
import dataclasses
from dataclasses import dataclass, field
from typing import Any

from scipy.constants import atomic_mass

from .params import (
    CALCIUM_CELL,
    AtomParams,
    ControlParams,
    EnvParams,
    LabUnits,
    Parameters,
    ValidationError,
    validate,
)

DEFAULTS = {
    "atom": {k: 1.0 for k in ("gamma_1", "gamma_2", "gamma_o", "Gamma_1", "Gamma_2", "Gamma_o")},
    "control": {"G1": 100.0, "G2": 0.0, "Delta": 0.0},
    "env": {"zeta": 10.0, "omega_d": 50.0, "alpha_l": 300.0},
    "lab": {
        "temperature": CALCIUM_CELL.temperature,
        "mass_u": CALCIUM_CELL.mass / atomic_mass,
        "cell_length": CALCIUM_CELL.cell_length,
        "density": CALCIUM_CELL.density,
        "field_gauss": CALCIUM_CELL.field_gauss,
        "control_intensity": CALCIUM_CELL.control_intensity,
        "wavelength": CALCIUM_CELL.wavelength,
        "d": CALCIUM_CELL.d,
        "D": CALCIUM_CELL.D,
        "gamma": CALCIUM_CELL.gamma,
    },
    "sweep": {
        "variable": "delta",
        "lo": -300.0,
        "hi": 300.0,
        "points": 2001,
        "delta": 0.0,
        "control": True,
        "two_photon": False,
        "field": True,
        "n": 0,
    },
}

_COMPLEX = {("control", "G1"), ("control", "G2")}


class ConfigError(ValueError):
    """Unreadable or inconsistent configuration; message names line and key."""


@dataclass
class RunConfig:
    params: Parameters
    lab: LabUnits
    sweep: dict
    notes: list = field(default_factory=list)


def _line_of(text, section, key=None):
    """Line number of ``key`` in ``section`` (of the header if key is None)."""
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1].strip()
            if key is None and current == section:
                return lineno
        elif key is not None and current == section:
            if line.split("=")[0].split(":")[0].strip() == key:
                return lineno
    return None


def _convert(kind, raw):
    if isinstance(kind, bool):
        value = raw.strip().lower()
        if value in ("1", "true", "yes", "on"):
            return True
        if value in ("0", "false", "no", "off"):
            return False
        raise ValueError(f"not a boolean: {raw!r}")
    if isinstance(kind, int):
        return int(raw)
    if isinstance(kind, float):
        return float(raw)
    return raw.strip()


def read_config(path=None, text=None, base=None):
    """Parse a configuration file (or ``text``) into a :class:`RunConfig`.

    ``base`` is an optional mapping ``{section: {key: value}}`` (a preset)
    whose values replace the defaults before the file is applied.
    """
    from_file = path is not None or text is not None
    if text is None and path is not None:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ConfigError(f"{path}: {exc.strerror}") from exc
    text = text or ""
    where = path or "<config>"

    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str
    try:
        parser.read_string(text, source=where)
    except configparser.Error as exc:
        raise ConfigError(f"{where}: {exc}") from exc

    values: dict[str, dict[str, Any]] = {}
    notes = []
    for section in parser.sections():
        if section not in DEFAULTS:
            line = _line_of(text, section)
            raise ConfigError(f"{where}:{line}: unknown section [{section}]")
        for key in parser[section]:
            if key not in DEFAULTS[section]:
                line = _line_of(text, section, key)
                raise ConfigError(f"{where}:{line}: unknown key {section}.{key}")

    for section, keys in DEFAULTS.items():
        values[section] = {}
        preset = (base or {}).get(section, {})
        for key, default in keys.items():
            if parser.has_option(section, key):
                raw = parser.get(section, key)
                try:
                    if (section, key) in _COMPLEX:
                        value = complex(raw.replace(" ", ""))
                        value = value.real if value.imag == 0 else value
                    else:
                        value = _convert(default, raw)
                except ValueError as exc:
                    line = _line_of(text, section, key)
                    raise ConfigError(f"{where}:{line}: {section}.{key}: {exc}") from exc
                values[section][key] = value
            elif key in preset:
                values[section][key] = preset[key]
            else:
                values[section][key] = default
                if from_file and section != "lab":
                    notes.append(f"{section}.{key} not set, using default {default!r}")

    try:
        run = _build(values)
    except ValidationError as exc:
        raise ConfigError(f"{where}: {exc}") from exc
    run.notes = notes
    return run


def _build(values):
    atom = AtomParams(**values["atom"])
    ctrl = ControlParams(**values["control"])
    env = EnvParams(**values["env"])
    validate(atom, ctrl, env)
    lab_values = dict(values["lab"])
    lab_values["mass"] = lab_values.pop("mass_u") * atomic_mass
    lab = LabUnits(**lab_values)
    return RunConfig(Parameters(atom, ctrl, env), lab, dict(values["sweep"]))


def preset_values(spec):
    """Config-shaped mapping of a :class:`~coherent_mor.scan.SweepSpec`."""
    p = spec.params
    return {
        "atom": dataclasses.asdict(p.atom),
        "control": {"G1": p.ctrl.G1, "G2": p.ctrl.G2, "Delta": p.ctrl.Delta},
        "env": dataclasses.asdict(p.env),
        "sweep": {
            "variable": spec.variable,
            "lo": spec.lo,
            "hi": spec.hi,
            "points": spec.points,
            "delta": spec.delta,
            "control": spec.control,
            "two_photon": spec.two_photon,
            "field": spec.field,
        },
    }
