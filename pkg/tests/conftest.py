import time

import numpy as np
import pytest

import npnls


@pytest.fixture(scope="session")
def paper_setup():
    """Soliton benchmark setup: eta=1, vel=1, kappa=1e-4, beta=1/2,
    [-150, 50] with 1000 nodes, cubic nonlinearity."""
    grid = npnls.make_grid(-150.0, 50.0, 1000)
    params = npnls.ModelParams(1e-4, 0.5, npnls.PowerLaw(2))
    spec = npnls.SolitonSpec(1.0, 1.0, 1e-4)
    return grid, params, spec


def _soliton_reference(spec, grid):
    def ref(t):
        u = npnls.soliton_value(grid.nodes, t, spec)
        v, _ = npnls.soliton_time_derivatives(grid.nodes, t, spec)
        return u, v
    return ref


@pytest.fixture(scope="session")
def soliton_runs(paper_setup):
    """Midpoint runs to T=100 at dt in {1/5, 1/10, 1/20, 1/40}, shared by the
    convergence/invariant/Hamiltonian acceptance tests.

    Returns (records by dt, total wall time in seconds)."""
    grid, params, spec = paper_setup
    ref = _soliton_reference(spec, grid)
    u0, v0 = npnls.soliton_state_arrays(spec, grid)
    out = {}
    start = time.perf_counter()
    for dt in (0.2, 0.1, 0.05, 0.025):
        cfg = npnls.StepperConfig(dt, fp_tol=1e-13, fp_max_iters=200)
        init = npnls.FieldState(u0, v0, 0.0)
        _, records = npnls.simulate(init, params, grid, cfg, t_end=100.0,
                                    sample_every=max(1, round(1.0 / (10.0 * dt))),
                                    reference=ref)
        out[dt] = records
    return out, time.perf_counter() - start


def smooth_band_limited(rng, n, mcut, amp):
    """Random field with Gaussian-decaying coefficients supported on |m| <= mcut,
    scaled to max amplitude amp."""
    c = np.zeros(n, dtype=complex)
    for m in range(-mcut, mcut + 1):
        c[m % n] = (rng.standard_normal() + 1j * rng.standard_normal()) \
            * np.exp(-0.5 * (m / max(mcut / 2.0, 1.0)) ** 2)
    f = np.fft.ifft(c * n)
    return amp * f / np.max(np.abs(f))
