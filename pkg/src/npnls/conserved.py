"""Discrete conserved functionals and multi-symplectic diagnostics.

Sign conventions follow the Hamiltonian form of the equation: the density
potential entering H_h and the local conservation laws is the one whose
(p,q)-gradient is (Re f, Im f), i.e. half the catalogue potential V (which is
normalized so that f = dV/dz_bar).  All reported functionals carry the factor
h, so values are grid-resolution comparable.

I_{1,h} is an exact quadratic invariant of the semi-discrete system and is
preserved by the midpoint scheme to fixed-point tolerance on any trajectory.
I_{2,h} is a quasi-invariant: exactly zero for symmetric data, conserved to
spectral accuracy on resolved fields, and not conserved once the solution
develops content at the grid's Nyquist scale.
"""

import numpy as np

from .grid import dense_bh, spectral_derivative
from .models import evaluate_V


class DiagnosticsRecord:
    """Per-sample scalars tracked along a trajectory."""

    __slots__ = ("t", "hamiltonian", "i1", "i2", "l2_norm", "fp_iters", "err_u", "err_v")

    def __init__(self, t, hamiltonian, i1, i2, l2_norm, fp_iters, err_u=None, err_v=None):
        self.t = t
        self.hamiltonian = hamiltonian
        self.i1 = i1
        self.i2 = i2
        self.l2_norm = l2_norm
        self.fp_iters = fp_iters
        self.err_u = err_u
        self.err_v = err_v


class MSFormPair:
    """Two variational solutions along one base trajectory."""

    def __init__(self, U, V):
        if U.du.shape != V.du.shape or U.t != V.t:
            raise ValueError("tangent pair must share grid size and time")
        self.U = U
        self.V = V


def _potential_density(state, params, grid):
    # gradient-convention factor 1/2: grad_(p,q) of (V/2) equals (Re f, Im f)
    return 0.5 * evaluate_V(params.nonlinearity, state.u, grid.nodes)


def hamiltonian_h(state, params, grid):
    """h*H_h with H_h = -1/2 [beta<u, A_h u> + kappa<v, v>] - sum of potential."""
    Au = spectral_derivative(state.u, 2, grid)
    quad = (params.beta * np.vdot(state.u, Au).real
            + params.kappa * np.vdot(state.v, state.v).real)
    return grid.h * (-0.5 * quad - float(np.sum(_potential_density(state, params, grid))))


def invariant_i1(state, params, grid):
    """h*I_{1,h} = h[-1/2 <u,u> - kappa(<p,phi_im> - <q,phi_re>)]."""
    p, q = state.u.real, state.u.imag
    val = (-0.5 * np.vdot(state.u, state.u).real
           - params.kappa * float(np.sum(p * state.v.imag - q * state.v.real)))
    return grid.h * val


def invariant_i2(state, params, grid):
    """h*I_{2,h} = h[-kappa(<B p, Re v> + <B q, Im v>) + 1/2(<B p, q> - <p, B q>)]."""
    Bu = spectral_derivative(state.u, 1, grid)
    p, q = state.u.real, state.u.imag
    val = (-params.kappa * float(np.sum(Bu.real * state.v.real + Bu.imag * state.v.imag))
           + 0.5 * float(np.sum(Bu.real * q) - np.sum(p * Bu.imag)))
    return grid.h * val


def symplectic_form(U, V, kappa, h=1.0):
    """h * sum_j [(Up Vq - Uq Vp) - kappa(Up Vphi - Uphi Vp + Uq Vpsi - Upsi Vq)].

    U, V are TangentStates; components are read from the complex pairs
    (Up = Re du, Uq = Im du, Uphi = Re dv, Upsi = Im dv).
    """
    Up, Uq = U.du.real, U.du.imag
    Uf, Us = U.dv.real, U.dv.imag
    Vp, Vq = V.du.real, V.du.imag
    Vf, Vs = V.dv.real, V.dv.imag
    val = np.sum(Up * Vq - Uq * Vp) - kappa * np.sum(Up * Vf - Uf * Vp + Uq * Vs - Us * Vq)
    return h * float(val)


def s1_matrix(grid, kappa):
    """Dense symmetric S_1 with x^T S_1 x = h*I_{1,h} for x = (p, q, phi, psi)."""
    n = grid.n
    I = np.eye(n)
    Z = np.zeros((n, n))
    kI = kappa * I
    S = np.block([[I, Z, Z, kI],
                  [Z, I, -kI, Z],
                  [Z, -kI, Z, Z],
                  [kI, Z, Z, Z]])
    return -(grid.h / 2.0) * S


def s2_matrix(grid, kappa):
    """Dense symmetric S_2 with x^T S_2 x = h*I_{2,h}; built by symmetrizing the
    bilinear form h[kappa p^T B phi + kappa q^T B psi - p^T B q]."""
    B = dense_bh(grid)
    n = grid.n
    Z = np.zeros((n, n))
    kB = kappa * B
    S = np.block([[Z, -B, kB, Z],
                  [B, Z, Z, kB],
                  [-kB, Z, Z, Z],
                  [Z, -kB, Z, Z]])
    return (grid.h / 2.0) * S


def pack_state(state):
    """(p, q, phi, psi) concatenation for the quadratic-form identities."""
    return np.concatenate([state.u.real, state.u.imag, state.v.real, state.v.imag])


def local_conservation_residuals(window, params, grid):
    """Pointwise residuals of the local energy and momentum conservation laws
    on three consecutive sampled states with uniform spacing.

    x-derivatives are spectral; t-derivatives are three-point centered
    differences on the window, so the residuals of an exact solution are
    O(dt_s^2).  Returns (energy_residual, momentum_residual) as real vectors.
    """
    s0, s1, s2 = window
    d10 = s1.t - s0.t
    d21 = s2.t - s1.t
    if d10 <= 0 or abs(d21 - d10) > 1e-9 * max(1.0, abs(d10)):
        raise ValueError(f"window spacing mismatch: {d10} vs {d21}")
    dts = 0.5 * (s2.t - s0.t)
    kappa, beta = params.kappa, params.beta

    def d1(f):
        return spectral_derivative(np.asarray(f, dtype=complex), 1, grid)

    def energy_density(s):
        uxx = spectral_derivative(s.u, 2, grid)
        W = 0.5 * evaluate_V(params.nonlinearity, s.u, grid.nodes)
        return (W + 0.5 * kappa * np.abs(s.v) ** 2
                + 0.5 * beta * (s.u.real * uxx.real + s.u.imag * uxx.imag))

    ux1 = d1(s1.u)
    uxt = (d1(s2.u) - d1(s0.u)) / (2.0 * dts)
    flux_e = 0.5 * beta * ((np.conj(ux1) * s1.v).real - (np.conj(s1.u) * uxt).real)
    energy_res = ((energy_density(s2) - energy_density(s0)) / (2.0 * dts)
                  + d1(flux_e).real)

    def momentum_density(s):
        ux = d1(s.u)
        vx = d1(s.v)
        return (0.5 * kappa * (-(s.u.real * vx.real + s.u.imag * vx.imag)
                               + ux.real * s.v.real + ux.imag * s.v.imag)
                + 0.5 * (s.u.real * ux.imag - s.u.imag * ux.real))

    vt = (s2.v - s0.v) / (2.0 * dts)
    W1 = 0.5 * evaluate_V(params.nonlinearity, s1.u, grid.nodes)
    flux_m = (W1 + 0.5 * beta * np.abs(ux1) ** 2
              - 0.5 * ((s1.u.real * s1.v.imag - s1.u.imag * s1.v.real)
                       - kappa * (s1.u.real * vt.real + s1.u.imag * vt.imag)))
    momentum_res = ((momentum_density(s2) - momentum_density(s0)) / (2.0 * dts)
                    + d1(flux_m).real)
    return energy_res, momentum_res
