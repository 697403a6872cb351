"""Periodic uniform grid and exact spectral differentiation.

The first-derivative operator B_h is realized as multiplication by
mu_m = i*m*2*pi/(b-a) in Fourier space, and the second-derivative operator
is A_h = B_h^2.  DFT convention is numpy's: un-normalized forward transform,
1/n on the inverse.  The Nyquist mode's first-derivative multiplier is set
to zero, which keeps B_h real and skew-symmetric (equivalent to the real
part taken in the dense-entry formula).
"""

import numpy as np

from .errors import ConfigError


class GridSpec:
    """Uniform periodic grid on [a, b) with n nodes x_j = a + j*h."""

    def __init__(self, a, b, n):
        if b <= a:
            raise ConfigError(f"grid requires b > a, got a={a}, b={b}")
        if n < 4 or n % 2 != 0:
            raise ConfigError(f"grid requires even n >= 4, got n={n}")
        self.a = float(a)
        self.b = float(b)
        self.n = int(n)
        self.h = (self.b - self.a) / self.n
        self.nodes = self.a + self.h * np.arange(self.n)
        # wavenumbers k_m = 2*pi*m/(b-a) in fft ordering; mu = i*k with the
        # Nyquist entry of the order-1 multiplier zeroed
        self.k = 2.0 * np.pi * np.fft.fftfreq(self.n, d=self.h)
        mu = 1j * self.k
        mu[self.n // 2] = 0.0
        self.mu = mu

    def __repr__(self):
        return f"GridSpec(a={self.a}, b={self.b}, n={self.n})"


def make_grid(a, b, n):
    return GridSpec(a, b, n)


def forward_transform(field, grid):
    field = np.asarray(field)
    if field.shape[-1] != grid.n:
        raise ValueError(f"field length {field.shape[-1]} != grid.n {grid.n}")
    return np.fft.fft(field)


def inverse_transform(coeffs, grid):
    coeffs = np.asarray(coeffs)
    if coeffs.shape[-1] != grid.n:
        raise ValueError(f"coefficient length {coeffs.shape[-1]} != grid.n {grid.n}")
    return np.fft.ifft(coeffs)


def spectral_derivative(field, order, grid):
    """B_h*field for order 1, A_h*field = B_h^2*field for order 2."""
    if order not in (1, 2):
        raise ValueError(f"unsupported derivative order {order}")
    mult = grid.mu if order == 1 else grid.mu ** 2
    return np.fft.ifft(mult * np.fft.fft(np.asarray(field, dtype=complex)))


def bh_entry(l, j, grid):
    """Dense entry (B_h)_{lj} = Re((2*pi*i/(n*(b-a))) * sum_m theta^{m(j-l)} m).

    theta = exp(-2*pi*i/n); the sum runs over m = -n/2 .. n/2-1.  O(n) per
    entry; intended as an oracle for the multiplier implementation.
    """
    n = grid.n
    if not (0 <= l < n and 0 <= j < n):
        raise IndexError(f"indices ({l},{j}) out of range for n={n}")
    theta = np.exp(-2j * np.pi / n)
    m = np.arange(-n // 2, n // 2)
    s = np.sum(theta ** (m * (j - l)) * m)
    return float(np.real(2j * np.pi / (n * (grid.b - grid.a)) * s))


def dense_bh(grid):
    """Assemble the full skew-symmetric differentiation matrix from bh_entry."""
    n = grid.n
    B = np.empty((n, n))
    for l in range(n):
        for j in range(n):
            B[l, j] = bh_entry(l, j, grid)
    return B
