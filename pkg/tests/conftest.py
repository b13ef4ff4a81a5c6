import numpy as np
import pytest

from coherent_mor.faddeeva import w_reference


def reference_grid(n=10_000, seed=20240601):
    """Random points over the upper half-plane, dense near the real axis."""
    rng = np.random.default_rng(seed)
    x = rng.uniform(-40.0, 40.0, n)
    y = 10.0 ** rng.uniform(-6.0, 1.6, n)
    # a third of the points inside the branch crossovers
    k = n // 3
    r = rng.uniform(0.5, 10.0, k)
    phi = rng.uniform(1e-6, np.pi - 1e-6, k)
    x[:k] = r * np.cos(phi)
    y[:k] = r * np.sin(phi)
    return x + 1j * y


@pytest.fixture(scope="session")
def faddeeva_reference():
    z = reference_grid()
    ref = np.array([w_reference(v) for v in z])
    return z, ref


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    results = test_acceptance.RESULTS
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        ok, detail = results[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
