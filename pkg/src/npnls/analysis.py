"""Closed-form apparatus: linear Fourier multiplier and eigenvalues,
continuous and numerical dispersion relations, the exact cubic soliton, and
the relative-equilibrium residual.

The soliton closed form holds for beta = 1/2 with cubic nonlinearity
f(u) = |u|^2 u; SolitonSpec carries (eta, vel, kappa) and the derived
multipliers (mu1, mu2).  The (mu1, mu2) mapping is validated by the
relative-equilibrium residual gate rather than taken on faith.
"""

import math

import numpy as np

from .errors import ConfigError
from .grid import spectral_derivative
from .models import evaluate_f, evaluate_g
from .stepping import _multiplier_entries


def lambda_eigenvalues(xi, params):
    """Eigenvalues (lambda_plus, lambda_minus) of A(xi); purely imaginary for
    4*beta*kappa*xi^2 < 1, complex pair via the principal square root beyond."""
    root = np.sqrt(complex(4.0 * params.beta * params.kappa * xi ** 2 - 1.0))
    lp = (1j + root) / (2.0 * params.kappa)
    lm = (1j - root) / (2.0 * params.kappa)
    return complex(lp), complex(lm)


def linear_multiplier(xi, t, params):
    """2x2 multiplier m(xi, t) = exp(-t*A(xi)), evaluated in a form that is
    uniformly accurate through the confluent point xi_+."""
    m11, m12, m21, m22 = _multiplier_entries(
        np.asarray([xi], dtype=float), t, params.kappa, params.beta)
    return np.array([[m11[0], m12[0]], [m21[0], m22[0]]])


def xi_plus(params):
    """Degenerate wavenumber xi_+ = 1/(2*sqrt(beta*kappa))."""
    return 1.0 / (2.0 * math.sqrt(params.beta * params.kappa))


def continuous_dispersion_residual(k, omega, amplitude, params):
    """|kappa*omega^2 + omega + beta*k^2 - g(amplitude)| (g term only for
    amplitude > 0; requires a radial-factor model in that case)."""
    if amplitude < 0:
        raise ValueError(f"amplitude must be >= 0, got {amplitude}")
    val = params.kappa * omega ** 2 + omega + params.beta * k ** 2
    if amplitude > 0:
        val -= float(evaluate_g(params.nonlinearity, amplitude))
    return abs(val)


def _numerical_dispersion_value(xi, omega_t, amplitude_flag, params, h, dt):
    psi1 = xi / h
    psi2 = (2.0 / dt) * math.tan(omega_t / 2.0)
    val = params.kappa * psi2 ** 2 + psi2 + params.beta * psi1 ** 2
    if amplitude_flag:
        val -= float(evaluate_g(params.nonlinearity, abs(math.cos(omega_t / 2.0))))
    return val


def numerical_dispersion_residual(xi, omega_t, amplitude_flag, params, h, dt):
    """|D(psi1(xi), psi2(omega_t))| with psi1 = xi/h, psi2 = (2/dt)tan(omega_t/2);
    the nonlinear variant subtracts g(|cos(omega_t/2)|)."""
    if not abs(omega_t) < math.pi:
        raise ValueError(f"omega_t must lie in (-pi, pi), got {omega_t}")
    return abs(_numerical_dispersion_value(xi, omega_t, amplitude_flag, params, h, dt))


def continuous_dispersion_roots(k, amplitude, params):
    """The two omega roots of kappa*omega^2 + omega + beta*k^2 - g(A) = 0,
    ordered (paraxial-like, fast)."""
    g = float(evaluate_g(params.nonlinearity, amplitude)) if amplitude > 0 else 0.0
    c = params.beta * k ** 2 - g
    disc = 1.0 - 4.0 * params.kappa * c
    if disc < 0:
        raise ValueError("no real dispersion roots at this wavenumber")
    # -1 + sqrt(disc) cancels catastrophically for small kappa; use the
    # product form slow * fast = c / kappa instead
    slow = -2.0 * c / (1.0 + math.sqrt(disc))
    fast = (-1.0 - math.sqrt(disc)) / (2.0 * params.kappa)
    return slow, fast


def numerical_dispersion_roots(xi, params, h, dt, nonlinear=False, n_scan=4000):
    """All roots in omega_t of the numerical dispersion relation at fixed xi,
    located by sign-change bracketing on a uniform scan of (-pi, pi) and
    refined by bisection."""
    lo, hi = -math.pi + 1e-9, math.pi - 1e-9
    ts = np.linspace(lo, hi, n_scan)
    vals = np.array([_numerical_dispersion_value(xi, t, nonlinear, params, h, dt)
                     for t in ts])
    roots = []
    for i in range(len(ts) - 1):
        va, vb = vals[i], vals[i + 1]
        if va == 0.0:
            roots.append(float(ts[i]))
            continue
        if va * vb < 0:
            a, b = float(ts[i]), float(ts[i + 1])
            fa = va
            for _ in range(200):
                m = 0.5 * (a + b)
                fm = _numerical_dispersion_value(xi, m, nonlinear, params, h, dt)
                if fm == 0.0 or (b - a) < 1e-16:
                    break
                if fa * fm < 0:
                    b = m
                else:
                    a, fa = m, fm
            roots.append(0.5 * (a + b))
    return roots


def plane_wave_omega(k, amplitude, params):
    """Frequency of the exact plane wave A*exp(i(kx + omega*t)): the dispersion
    root that tends to -(beta*k^2 - g(A)) in the paraxial limit kappa -> 0."""
    slow, _ = continuous_dispersion_roots(k, amplitude, params)
    return slow


class SolitonSpec:
    """Exact cubic soliton (beta = 1/2): amplitude eta, velocity vel, kappa.

    Derived quantities: c = sqrt(1 + 2*kappa*vel^2), s = sqrt((1 + 2*kappa*eta^2)
    / (1 + 2*kappa*vel^2)), and the relative-equilibrium multipliers
    mu1 = (s - 1)/(2*kappa) + s*vel^2, mu2 = vel.
    """

    def __init__(self, eta, vel, kappa):
        if eta <= 0:
            raise ConfigError(f"soliton amplitude eta must be > 0, got {eta}")
        if kappa <= 0:
            raise ConfigError(f"kappa must be > 0, got {kappa}")
        self.eta = float(eta)
        self.vel = float(vel)
        self.kappa = float(kappa)
        self.c = math.sqrt(1.0 + 2.0 * kappa * vel ** 2)
        self.s = math.sqrt((1.0 + 2.0 * kappa * eta ** 2) / (1.0 + 2.0 * kappa * vel ** 2))
        self.omega = (self.s - 1.0) / (2.0 * kappa)
        self.mu1 = self.omega + self.s * vel ** 2
        self.mu2 = float(vel)

    def _rho(self, X):
        return self.eta / np.cosh(self.eta * X / self.c)

    def _rho_p(self, X):
        z = self.eta * np.asarray(X) / self.c
        return -(self.eta ** 2 / self.c) / np.cosh(z) * np.tanh(z)

    def _rho_pp(self, X):
        z = self.eta * np.asarray(X) / self.c
        sech = 1.0 / np.cosh(z)
        tanh = np.tanh(z)
        return (self.eta ** 3 / self.c ** 2) * sech * (tanh ** 2 - sech ** 2)

    def _phase(self, x, t):
        return self.s * (t / (2.0 * self.kappa) - self.vel * np.asarray(x)) - t / (2.0 * self.kappa)


def soliton_value(x, t, spec):
    """u(x,t) = rho(x + V t) * exp(i s (t/(2 kappa) - V x) - i t/(2 kappa))."""
    X = np.asarray(x) + spec.vel * t
    return spec._rho(X) * np.exp(1j * spec._phase(x, t))


def soliton_time_derivatives(x, t, spec):
    """Analytic (u_t, u_tt) of the soliton closed form."""
    X = np.asarray(x) + spec.vel * t
    phase = np.exp(1j * spec._phase(x, t))
    rho = spec._rho(X)
    rho_p = spec._rho_p(X)
    V, om = spec.vel, spec.omega
    ut = (V * rho_p + 1j * om * rho) * phase
    utt = (V ** 2 * spec._rho_pp(X) + 2j * om * V * rho_p - om ** 2 * rho) * phase
    return ut, utt


def soliton_state_arrays(spec, grid, t=0.0):
    """(u, v) node arrays of the exact soliton at time t."""
    u = soliton_value(grid.nodes, t, spec)
    v, _ = soliton_time_derivatives(grid.nodes, t, spec)
    return u, v


def relative_equilibrium_residual(profile_u0, mu1, mu2, params, grid):
    """Pointwise magnitude of (beta + kappa*mu2^2) u0'' + f(u0)
    + i*mu2*(1 + 2*kappa*mu1) u0' - mu1*(1 + kappa*mu1) u0, derivatives spectral."""
    u0 = np.asarray(profile_u0, dtype=complex)
    k, b = params.kappa, params.beta
    up = spectral_derivative(u0, 1, grid)
    upp = spectral_derivative(u0, 2, grid)
    res = ((b + k * mu2 ** 2) * upp + evaluate_f(params.nonlinearity, u0, grid.nodes)
           + 1j * mu2 * (1.0 + 2.0 * k * mu1) * up - mu1 * (1.0 + k * mu1) * u0)
    return np.abs(res)
