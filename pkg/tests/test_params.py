import dataclasses
import math

import pytest

from coherent_mor.params import (
    CALCIUM_CELL,
    AtomParams,
    ControlParams,
    EnvParams,
    ProbePoint,
    ValidationError,
    lab_from_scaled,
    scaled_from_lab,
    validate,
    violations,
)


def test_defaults_validate():
    p = validate(AtomParams(), ControlParams(G1=100), EnvParams(10, 50, 300))
    assert p.atom.gamma_sum == 3.0


def test_every_violation_is_reported():
    with pytest.raises(ValidationError) as info:
        validate(AtomParams(gamma_1=0, Gamma_2=-1), ControlParams(), EnvParams(omega_d=-1))
    messages = info.value.violations
    assert len(messages) == 3
    assert any("upper decay must be positive" in m for m in messages)
    assert any("doppler width must be non-negative" in m for m in messages)


def test_non_finite_control_rejected():
    assert violations(AtomParams(), ControlParams(G1=complex(math.nan, 0)), EnvParams())


def test_uniform_and_frozen():
    atom = AtomParams.uniform(0.5, 2.0)
    assert atom.gamma_o == 0.5 and atom.Gamma_o == 2.0 and atom.gamma_sum == 6.0
    with pytest.raises(dataclasses.FrozenInstanceError):
        atom.gamma_1 = 3.0


def test_probe_point():
    p = ProbePoint.moving(-5.0, 2.0)
    assert p.shifted == -3.0
    assert ProbePoint(4.0).shifted == 4.0


def test_calcium_cell_reproduces_quoted_scales():
    s = scaled_from_lab(CALCIUM_CELL)
    assert s.env.omega_d == pytest.approx(50, rel=0.10)
    assert 2 * s.env.zeta == pytest.approx(20, rel=0.10)
    assert s.env.alpha_l == pytest.approx(300, rel=0.10)
    assert abs(s.ctrl.G1) == pytest.approx(100, rel=0.10)
    assert set(s.formulas) == {"omega_d", "alpha_l", "zeta", "G1"}


def test_scaling_laws():
    base = scaled_from_lab(CALCIUM_CELL)
    hot = scaled_from_lab(dataclasses.replace(CALCIUM_CELL, temperature=4 * CALCIUM_CELL.temperature))
    assert hot.env.omega_d == pytest.approx(2 * base.env.omega_d)
    strong = scaled_from_lab(dataclasses.replace(CALCIUM_CELL, control_intensity=20.0))
    assert abs(strong.ctrl.G1) == pytest.approx(2 * abs(base.ctrl.G1))


def test_round_trip():
    s = scaled_from_lab(CALCIUM_CELL)
    lab = lab_from_scaled(s.ctrl, s.env, CALCIUM_CELL)
    for name in ("temperature", "density", "field_gauss", "control_intensity"):
        assert getattr(lab, name) == pytest.approx(getattr(CALCIUM_CELL, name), rel=1e-12)


def test_bad_lab_units():
    with pytest.raises(ValidationError):
        scaled_from_lab(dataclasses.replace(CALCIUM_CELL, temperature=-1.0))


@pytest.mark.parametrize("field_name, quantity, factor", [
    ("temperature", "omega_d", math.sqrt(2)),
    ("density", "alpha_l", 2.0),
    ("field_gauss", "zeta", 2.0),
])
def test_doubling_laws(field_name, quantity, factor):
    base = scaled_from_lab(CALCIUM_CELL).env
    doubled = dataclasses.replace(CALCIUM_CELL, **{field_name: 2 * getattr(CALCIUM_CELL, field_name)})
    assert getattr(scaled_from_lab(doubled).env, quantity) == pytest.approx(factor * getattr(base, quantity))


def test_zero_upper_decay_message():
    assert violations(AtomParams(Gamma_1=0), ControlParams(), EnvParams()) == [
        "upper decay must be positive: Gamma_1=0"
    ]


def test_negative_field_allowed():
    validate(AtomParams(), ControlParams(), EnvParams(zeta=-22.4))
