import numpy as np
import pytest
from numpy.testing import assert_allclose

import npnls
from npnls import (ConfigError, bh_entry, dense_bh, forward_transform,
                   inverse_transform, make_grid, spectral_derivative)


def brute_dft(f):
    # O(n^2) direct sum, numpy forward convention
    n = len(f)
    j = np.arange(n)
    return np.array([np.sum(f * np.exp(-2j * np.pi * m * j / n)) for m in range(n)])


def test_make_grid_paper_interval():
    g = make_grid(-150.0, 50.0, 1000)
    assert g.h == pytest.approx(0.2, rel=1e-14)
    assert g.nodes[0] == -150.0
    assert g.nodes[-1] == pytest.approx(50.0 - g.h, rel=1e-14)
    assert abs(g.h * g.n - (g.b - g.a)) < 1e-14 * (g.b - g.a)


def test_make_grid_small():
    g = make_grid(0.0, 2 * np.pi, 4)
    assert_allclose(g.nodes, [0.0, np.pi / 2, np.pi, 3 * np.pi / 2], rtol=1e-15)


def test_make_grid_rejects_bad_input():
    with pytest.raises(ConfigError):
        make_grid(0.0, 1.0, 5)
    with pytest.raises(ConfigError):
        make_grid(0.0, 1.0, 2)
    with pytest.raises(ConfigError):
        make_grid(1.0, 1.0, 8)


def test_forward_transform_constant_and_mode():
    g = make_grid(-1.0, 3.0, 16)
    c = forward_transform(np.full(16, 2.5 + 0j), g)
    assert abs(c[0] - 16 * 2.5) < 1e-12
    assert np.max(np.abs(c[1:])) < 1e-12
    mode = np.exp(1j * 2 * np.pi * (g.nodes - g.a) / (g.b - g.a))
    cm = forward_transform(mode, g)
    assert abs(cm[1]) > 15.0
    cm[1] = 0.0
    assert np.max(np.abs(cm)) < 1e-10


def test_forward_transform_matches_brute_dft():
    rng = np.random.default_rng(11)
    g = make_grid(0.0, 1.0, 16)
    f = rng.standard_normal(16) + 1j * rng.standard_normal(16)
    assert_allclose(forward_transform(f, g), brute_dft(f), rtol=0, atol=1e-12)


def test_round_trip_identity():
    rng = np.random.default_rng(12)
    for n in (8, 16, 64, 1000):
        g = make_grid(-2.0, 5.0, n)
        f = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        back = inverse_transform(forward_transform(f, g), g)
        assert np.max(np.abs(back - f)) < 1e-12 * np.max(np.abs(f))


def test_inverse_transform_basis_function():
    g = make_grid(0.0, 2.0, 8)
    c = np.zeros(8, dtype=complex)
    c[3] = 1.0
    f = inverse_transform(c, g)
    expected = np.exp(1j * 2 * np.pi * 3 * (g.nodes - g.a) / (g.b - g.a)) / 8
    assert_allclose(f, expected, rtol=0, atol=1e-14)
    assert np.max(np.abs(inverse_transform(np.zeros(8), g))) == 0.0


def test_transform_length_mismatch():
    g = make_grid(0.0, 1.0, 8)
    with pytest.raises(ValueError):
        forward_transform(np.zeros(7), g)
    with pytest.raises(ValueError):
        inverse_transform(np.zeros(9), g)


def test_spectral_derivative_sine():
    g = make_grid(-1.0, 4.0, 32)
    w = 2 * np.pi / (g.b - g.a)
    f = np.sin(w * (g.nodes - g.a))
    df = spectral_derivative(f, 1, g)
    assert_allclose(df.real, w * np.cos(w * (g.nodes - g.a)), rtol=0, atol=1e-10)
    assert np.max(np.abs(df.imag)) < 1e-12


def test_spectral_derivative_constant_and_orders():
    g = make_grid(0.0, 1.0, 16)
    assert np.max(np.abs(spectral_derivative(np.full(16, 3.0 + 4.0j), 2, g))) < 1e-12
    with pytest.raises(ValueError):
        spectral_derivative(np.zeros(16), 3, g)
    rng = np.random.default_rng(13)
    f = rng.standard_normal(16) + 1j * rng.standard_normal(16)
    twice = spectral_derivative(spectral_derivative(f, 1, g), 1, g)
    once = spectral_derivative(f, 2, g)
    # order-1 multiplier zeroes the Nyquist mode, order-2 squares that
    assert np.max(np.abs(twice - once)) < 1e-10 * max(1.0, np.max(np.abs(once)))


def test_bh_entry_skew_symmetry():
    g = make_grid(0.0, 3.0, 16)
    assert bh_entry(5, 5, g) == pytest.approx(0.0, abs=1e-13)
    rng = np.random.default_rng(14)
    for _ in range(20):
        l, j = rng.integers(0, 16, size=2)
        assert bh_entry(int(l), int(j), g) == pytest.approx(
            -bh_entry(int(j), int(l), g), abs=1e-13)
    with pytest.raises(IndexError):
        bh_entry(16, 0, g)


def test_dense_bh_matches_multipliers():
    g = make_grid(-1.0, 1.0, 16)
    B = dense_bh(g)
    assert np.max(np.abs(B + B.T)) < 1e-13
    # eigenvector check: B times a sampled exponential equals mu_m times it
    for m in (1, 3, -5):
        mode = np.exp(1j * 2 * np.pi * m * (g.nodes - g.a) / (g.b - g.a))
        assert_allclose(B @ mode, g.mu[m % g.n] * mode, rtol=0, atol=1e-10)


def test_dense_bh_matches_spectral_derivative():
    rng = np.random.default_rng(15)
    g = make_grid(0.0, 2.0, 16)
    B = dense_bh(g)
    f = rng.standard_normal(16) + 1j * rng.standard_normal(16)
    assert_allclose(B @ f, spectral_derivative(f, 1, g), rtol=0, atol=1e-11)


def test_multiplier_structure():
    g = make_grid(0.0, 5.0, 32)
    assert np.max(np.abs(g.mu.real)) == 0.0
    for m in range(1, 16):
        assert g.mu[m] == -g.mu[(-m) % 32]
    assert g.mu[16] == 0.0  # Nyquist zeroed


def test_spectral_accuracy_sech():
    g = make_grid(-150.0, 50.0, 1000)
    f = 1.0 / np.cosh(g.nodes + 50.0)
    exact = -np.tanh(g.nodes + 50.0) / np.cosh(g.nodes + 50.0)
    df = spectral_derivative(f, 1, g)
    assert np.max(np.abs(df - exact)) < 1e-9
