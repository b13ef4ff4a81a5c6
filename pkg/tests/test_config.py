import pytest

from coherent_mor.config import ConfigError, preset_values, read_config
from coherent_mor.figures import preset


def test_empty_config_uses_documented_defaults():
    run = read_config(text="")
    p = run.params
    assert p.atom.gamma_sum == 3.0
    assert (p.ctrl.G1, p.ctrl.G2, p.ctrl.Delta) == (100.0, 0.0, 0.0)
    assert (p.env.zeta, p.env.omega_d, p.env.alpha_l) == (10.0, 50.0, 300.0)
    assert run.sweep["points"] == 2001


def test_missing_key_is_noted():
    run = read_config(text="[env]\nzeta = 20\n")
    assert run.params.env.omega_d == 50.0
    assert any("env.omega_d" in n and "50" in n for n in run.notes)
    assert not any("env.zeta" in n for n in run.notes)


def test_complex_amplitude_and_booleans():
    run = read_config(text="[control]\nG1 = 30+40j\n[sweep]\ntwo_photon = yes\ncontrol = off\n")
    assert run.params.ctrl.G1 == 30 + 40j
    assert run.sweep["two_photon"] is True and run.sweep["control"] is False


@pytest.mark.parametrize("text, fragment", [
    ("[env]\nzeta = abc\n", ":2: env.zeta"),
    ("[env]\n\nfoo = 1\n", ":3: unknown key env.foo"),
    ("[nope]\na = 1\n", ":1: unknown section [nope]"),
    ("[env]\nomega_d = -1\n", "doppler width must be non-negative"),
    ("[sweep]\ncontrol = maybe\n", "sweep.control"),
    ("zeta = 1\n", "<config>"),
])
def test_errors_name_line_and_key(text, fragment):
    with pytest.raises(ConfigError) as info:
        read_config(text=text)
    assert fragment in str(info.value)


def test_preset_is_overridden_by_file(tmp_path):
    path = tmp_path / "run.ini"
    path.write_text("[env]\nalpha_l = 100\n")
    run = read_config(str(path), base=preset_values(preset("fig4")))
    assert run.params.env.alpha_l == 100.0
    assert run.params.env.zeta == 20.0
    assert not any("env.zeta" in n for n in run.notes)


def test_missing_file():
    with pytest.raises(ConfigError):
        read_config("/nonexistent/run.ini")


def test_lab_section():
    run = read_config(text="[lab]\ntemperature = 2000\nmass_u = 40\n")
    assert run.lab.temperature == 2000.0
