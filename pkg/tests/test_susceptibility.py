import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coherent_mor.params import AtomParams, ControlParams
from coherent_mor.susceptibility import (
    NonlinearityWarning,
    SingularSystemError,
    s_general,
    s_no_control,
    s_reduced_minus,
    s_reduced_plus,
    s_two_photon_stationary,
    steady_state_oracle,
)

rates = st.floats(0.2, 3.0)
detuning = st.floats(-200.0, 200.0)
amplitude = st.floats(-150.0, 150.0)


def random_draws(n, seed):
    rng = np.random.default_rng(seed)
    for _ in range(n):
        atom = AtomParams(*rng.uniform(0.2, 3.0, 6))
        ctrl = ControlParams(
            G1=complex(*rng.uniform(-80, 80, 2)),
            G2=complex(*rng.uniform(-80, 80, 2)) * (rng.random() < 0.7),
        )
        zeta, delta_v, Delta_v = rng.uniform(-100, 100, 3)
        yield atom, ctrl, zeta, delta_v, Delta_v


def test_general_matches_master_equation():
    worst = 0.0
    for atom, ctrl, zeta, delta_v, Delta_v in random_draws(100, 7):
        closed = s_general(atom, ctrl, zeta, delta_v, Delta_v)
        oracle = steady_state_oracle(atom, ctrl, zeta, delta_v, Delta_v)
        for a, b in ((closed.s_plus, oracle.s_plus), (closed.s_minus, oracle.s_minus)):
            worst = max(worst, abs(a - b) / abs(b))
    assert worst <= 1e-9


def test_reduced_forms_are_the_sigma_plus_limit():
    atom = AtomParams(1.0, 0.7, 1.3, 0.9, 1.1, 0.5)
    delta_v = np.linspace(-80, 80, 41)
    Delta, delta, zeta = 12.0, -3.0, 7.5
    ctrl = ControlParams(G1=40 - 10j)
    general = s_general(atom, ctrl, zeta, delta_v, Delta + delta - delta_v)
    assert np.allclose(general.s_minus, s_reduced_minus(atom, zeta, delta_v), rtol=1e-13)
    assert np.allclose(general.s_plus, s_reduced_plus(atom, ctrl.G1, Delta, delta, zeta, delta_v),
                       rtol=1e-13)


def test_no_control_is_two_lorentzians():
    atom = AtomParams()
    d = np.linspace(-30, 30, 61)
    free = s_no_control(atom, 4.0, d)
    general = s_general(atom, ControlParams(), 4.0, d, 0.0)
    assert np.allclose(free.s_plus, general.s_plus, rtol=1e-14)
    assert np.allclose(free.s_minus, general.s_minus, rtol=1e-14)


def test_resonant_peak_value():
    # a bare line on resonance responds with i / gamma
    atom = AtomParams(gamma_2=2.0)
    assert s_reduced_minus(atom, 5.0, 5.0) == pytest.approx(0.5j)


def test_two_photon_stationary_is_locked_reduced_form():
    atom = AtomParams()
    delta = np.linspace(-50, 50, 101)
    locked = s_reduced_plus(atom, 20.0, -delta, delta, 10.0, delta)
    assert np.allclose(locked, s_two_photon_stationary(atom, 20.0, 10.0, delta), rtol=1e-14)


def test_strong_control_suppresses_plus():
    atom = AtomParams()
    s = [abs(s_reduced_plus(atom, g, 0.0, 0.0, 0.0, 0.0)) for g in (10, 100, 1000)]
    assert s[0] > s[1] > s[2] and s[2] < 1e-5


def test_phase_of_control_is_irrelevant():
    atom = AtomParams()
    a = s_general(atom, ControlParams(G1=30, G2=20), 3.0, 1.0, 2.0)
    b = s_general(atom, ControlParams(G1=30j, G2=-20), 3.0, 1.0, 2.0)
    assert a.s_plus == pytest.approx(b.s_plus) and a.s_minus == pytest.approx(b.s_minus)


@settings(max_examples=300, deadline=None)
@given(rates, rates, rates, rates, rates, rates, amplitude, amplitude, detuning, detuning, detuning)
def test_passive_single_velocity(g1, g2, go, G1r, G2r, Gor, c1, c2, zeta, dv, Dv):
    atom = AtomParams(g1, g2, go, G1r, G2r, Gor)
    pair = s_general(atom, ControlParams(G1=c1, G2=c2), zeta, dv, Dv)
    assert pair.s_plus.imag >= 0 and pair.s_minus.imag >= 0


@settings(max_examples=200, deadline=None)
@given(amplitude, amplitude, detuning, detuning, detuning)
def test_swapping_arms_swaps_susceptibilities(c1, c2, zeta, dv, Dv):
    atom = AtomParams()
    a = s_general(atom, ControlParams(G1=c1, G2=c2), zeta, dv, Dv)
    b = s_general(atom, ControlParams(G1=c2, G2=c1), -zeta, dv, Dv)
    assert b.s_plus == pytest.approx(a.s_minus, rel=1e-12)
    assert b.s_minus == pytest.approx(a.s_plus, rel=1e-12)


def test_oracle_rejects_vanishing_decay():
    with pytest.raises(SingularSystemError):
        steady_state_oracle(AtomParams(gamma_1=0.0), ControlParams(G1=1), 0, 0, 0)


def test_oracle_warns_when_probe_saturates():
    with pytest.warns(NonlinearityWarning):
        steady_state_oracle(AtomParams(), ControlParams(G1=5), 0.0, 0.0, 0.0, probe_amplitude=0.5)


def test_line_centre_without_control():
    pair = s_general(AtomParams(), ControlParams(), 0.0, 0.0, 0.0)
    assert pair.s_plus == pytest.approx(1j) and pair.s_minus == pytest.approx(1j)


def test_quoted_arithmetic():
    atom = AtomParams()
    assert s_reduced_minus(atom, 0.0, 1.0) == pytest.approx(0.5 + 0.5j)
    assert s_reduced_minus(atom, 10.0, 0.0) == pytest.approx((-10 + 1j) / 101)
    assert s_no_control(atom, 3.0, 5.0).s_plus == pytest.approx((8 + 1j) / 65)
    free = s_no_control(atom, 4.0, -4.0)
    assert free.s_plus == pytest.approx(1j)
    assert s_no_control(atom, 4.0, 4.0).s_minus == pytest.approx(1j)


def test_no_field_is_symmetric():
    pair = s_no_control(AtomParams(), 0.0, np.linspace(-10, 10, 21))
    assert np.array_equal(pair.s_plus, pair.s_minus)


def test_reduced_plus_without_control():
    atom = AtomParams()
    d = np.linspace(-20, 20, 9)
    assert np.allclose(s_reduced_plus(atom, 0.0, 3.0, 1.0, 2.0, d), s_no_control(atom, 2.0, d).s_plus,
                       rtol=1e-14)


def test_two_photon_peak_and_width():
    atom = AtomParams()
    assert s_two_photon_stationary(atom, 0.0, 7.0, -7.0) == pytest.approx(1j)
    peak = s_two_photon_stationary(atom, 20.0, 10.0, -10.0)
    assert peak.imag == pytest.approx(1 / (400 / 3 + 1), rel=1e-14)
    assert peak.imag == pytest.approx(7.44e-3, rel=1e-3)
    half = 400 / 3 + 1
    assert s_two_photon_stationary(atom, 20.0, 10.0, -10.0 + half).imag == pytest.approx(peak.imag / 2)


def test_fig3_point_against_oracle():
    atom = AtomParams()
    ctrl = ControlParams(G1=100)
    oracle = steady_state_oracle(atom, ctrl, 10.0, 0.0, 0.0)
    assert s_reduced_plus(atom, 100, 0.0, 0.0, 10.0, 0.0) == pytest.approx(oracle.s_plus, rel=1e-9)
    assert s_reduced_minus(atom, 10.0, 0.0) == pytest.approx(oracle.s_minus, rel=1e-9)


def test_quoted_random_point_against_oracle():
    atom = AtomParams()
    ctrl = ControlParams(G1=7 + 2j, G2=3)
    a = s_general(atom, ctrl, 4.0, -2.0, 5.0)
    b = steady_state_oracle(atom, ctrl, 4.0, -2.0, 5.0)
    assert a.s_plus == pytest.approx(b.s_plus, rel=1e-9)
    assert a.s_minus == pytest.approx(b.s_minus, rel=1e-9)


def test_halving_probe_leaves_oracle_unchanged():
    atom = AtomParams()
    ctrl = ControlParams(G1=30)
    a = steady_state_oracle(atom, ctrl, 2.0, 1.0, 0.0, probe_amplitude=1e-4)
    b = steady_state_oracle(atom, ctrl, 2.0, 1.0, 0.0, probe_amplitude=5e-5)
    assert abs(a.s_plus - b.s_plus) <= 1e-6 * abs(a.s_plus)
