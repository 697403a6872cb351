"""Time integration for kappa*u_tt + i*u_t + beta*u_xx + f(u) = 0.

Written as the first-order system u_t = v, kappa*v_t = -i*v - beta*A_h*u - f(u)
on a periodic grid.  Three propagators:

- midpoint_step: symplectic implicit midpoint, solved in Fourier space by
  fixed-point iteration on the nonlinear term; exact per-mode 2x2 solve per
  sweep.
- exact_linear_step: the f == 0 flow, applied mode-wise through the 2x2
  matrix exponential exp(-dt*A(xi)).
- variational_step: implicit midpoint for the tangent (variational) system
  with Df frozen at the converged base midpoint.
"""

import numpy as np

from .errors import ConfigError, IntegratorError
from .models import evaluate_df, evaluate_f


class FieldState:
    """Field u and its time derivative v = u_t at the nodes, at time t."""

    def __init__(self, u, v, t=0.0):
        u = np.asarray(u, dtype=complex)
        v = np.asarray(v, dtype=complex)
        if u.shape != v.shape or u.ndim != 1:
            raise ValueError(f"u and v must be equal-length vectors, got {u.shape}, {v.shape}")
        if not (np.all(np.isfinite(u.view(float))) and np.all(np.isfinite(v.view(float)))):
            raise ValueError("non-finite entries in state")
        self.u = u
        self.v = v
        self.t = float(t)


class TangentState:
    """Variational solution (du, dv) along a base trajectory."""

    def __init__(self, du, dv, t=0.0):
        du = np.asarray(du, dtype=complex)
        dv = np.asarray(dv, dtype=complex)
        if du.shape != dv.shape or du.ndim != 1:
            raise ValueError("du and dv must be equal-length vectors")
        self.du = du
        self.dv = dv
        self.t = float(t)


class StepperConfig:
    def __init__(self, dt, fp_tol=1e-13, fp_max_iters=200):
        if dt <= 0:
            raise ConfigError(f"dt must be > 0, got {dt}")
        if fp_tol < 1e-15:
            raise ConfigError(f"fp_tol must be >= 1e-15, got {fp_tol}")
        if fp_max_iters < 1:
            raise ConfigError(f"fp_max_iters must be >= 1, got {fp_max_iters}")
        self.dt = float(dt)
        self.fp_tol = float(fp_tol)
        self.fp_max_iters = int(fp_max_iters)


def _sinhc(z):
    # sinh(z)/z, series below |z| = 1e-4 where the quotient loses digits
    z = np.asarray(z, dtype=complex)
    small = np.abs(z) < 1e-4
    zs = np.where(small, 0.0, z)
    quotient = np.where(small, 1.0, np.divide(np.sinh(zs), np.where(small, 1.0, zs)))
    series = 1.0 + z ** 2 / 6.0 + z ** 4 / 120.0
    return np.where(small, series, quotient)


def _multiplier_entries(xi, t, kappa, beta):
    """Entries of exp(-t*A(xi)) for A = [[0, -1], [-beta*xi^2/kappa, i/kappa]].

    Written through the exponent mean lam = i/(2 kappa) and half-splitting
    delta = sqrt(4 beta kappa xi^2 - 1)/(2 kappa):
      m11 = e^{-t lam} (cosh(t delta) + lam t sinhc(t delta))
      m12 = t e^{-t lam} sinhc(t delta)
      m21 = -(lam^2 - delta^2) m12
      m22 = e^{-t lam} (cosh(t delta) - lam t sinhc(t delta))
    which stays accurate through the confluent point delta = 0.
    """
    xi = np.asarray(xi, dtype=float)
    disc = (4.0 * beta * kappa * xi ** 2 - 1.0).astype(complex)
    lam = 1j / (2.0 * kappa)
    delta = np.sqrt(disc) / (2.0 * kappa)
    z = t * delta
    ch = np.cosh(z)
    tsh = t * _sinhc(z)
    e = np.exp(-t * lam)
    m11 = e * (ch + lam * tsh)
    m12 = e * tsh
    m21 = -(lam ** 2 - delta ** 2) * m12
    m22 = e * (ch - lam * tsh)
    return m11, m12, m21, m22


class MidpointStepper:
    """Owns per-trajectory scratch (warm-start midpoint); one instance per
    trajectory, not shared across threads."""

    def __init__(self, params, grid, cfg):
        self.params = params
        self.grid = grid
        self.cfg = cfg
        dt = cfg.dt
        self._denom = 2.0 * params.kappa / dt + 1j + params.beta * (dt / 2.0) * grid.mu ** 2
        self._guess = None

    def step(self, state):
        """One implicit midpoint step; returns (new_state, iterations)."""
        p = self.params
        dt = self.cfg.dt
        u0h = np.fft.fft(state.u)
        v0h = np.fft.fft(state.v)
        rhs = p.kappa * v0h + 1j * u0h + (2.0 * p.kappa / dt) * u0h
        um = state.u if self._guess is None else self._guess
        x = self.grid.nodes
        it = 0
        for it in range(1, self.cfg.fp_max_iters + 1):
            fh = np.fft.fft(evaluate_f(p.nonlinearity, um, x))
            umh = (rhs - (dt / 2.0) * fh) / self._denom
            um_new = np.fft.ifft(umh)
            delta = np.max(np.abs(um_new - um))
            um = um_new
            if not np.isfinite(delta):
                raise IntegratorError("instability: non-finite midpoint iterate",
                                      last_residual=delta)
            if delta < self.cfg.fp_tol:
                break
        else:
            raise IntegratorError(
                f"fixed point not converged in {self.cfg.fp_max_iters} iterations "
                f"(last residual {delta:.3e})", last_residual=delta)
        umh = np.fft.fft(um)
        vmh = (2.0 / dt) * (umh - u0h)
        vm = np.fft.ifft(vmh)
        self._guess = um
        u1 = 2.0 * um - state.u
        v1 = 2.0 * vm - state.v
        new = FieldState.__new__(FieldState)
        new.u, new.v, new.t = u1, v1, state.t + dt
        new._midpoint = (um, vm)
        return new, it

    def reset(self):
        self._guess = None


def midpoint_step(state, params, grid, cfg):
    """Single cold-start midpoint step; returns (new_state, iterations).

    The returned state carries the converged midpoint pair in ``_midpoint``
    for use by variational_step.
    """
    return MidpointStepper(params, grid, cfg).step(state)


def exact_linear_step(state, params, grid, dt):
    """Exact f == 0 propagator over dt (any sign).  The Nyquist wavenumber is
    zeroed, matching A_h = B_h^2 of the semi-discrete system."""
    xi = grid.k.copy()
    xi[grid.n // 2] = 0.0
    m11, m12, m21, m22 = _multiplier_entries(xi, dt, params.kappa, params.beta)
    uh = np.fft.fft(state.u)
    vh = np.fft.fft(state.v)
    u1 = np.fft.ifft(m11 * uh + m12 * vh)
    v1 = np.fft.ifft(m21 * uh + m22 * vh)
    return FieldState(u1, v1, state.t + dt)


def variational_step(tangent, base_midpoint, params, grid, cfg):
    """Midpoint step of the linearized system kappa*dv_t = -i*dv - beta*A_h*du
    - Df(u)[du], with Df frozen at the converged base midpoint (u, chi).

    base_midpoint: the (u_mid, chi_mid) pair, or a state returned by
    midpoint_step/MidpointStepper.step (its ``_midpoint`` attribute is used).
    Returns (new_tangent, iterations).
    """
    if hasattr(base_midpoint, "_midpoint"):
        u_mid = base_midpoint._midpoint[0]
    else:
        u_mid = np.asarray(base_midpoint[0], dtype=complex)
    p = params
    dt = cfg.dt
    denom = 2.0 * p.kappa / dt + 1j + p.beta * (dt / 2.0) * grid.mu ** 2
    du0h = np.fft.fft(tangent.du)
    dv0h = np.fft.fft(tangent.dv)
    rhs = p.kappa * dv0h + 1j * du0h + (2.0 * p.kappa / dt) * du0h
    wm = tangent.du
    x = grid.nodes
    for it in range(1, cfg.fp_max_iters + 1):
        dfh = np.fft.fft(evaluate_df(p.nonlinearity, u_mid, wm, x))
        wmh = (rhs - (dt / 2.0) * dfh) / denom
        wm_new = np.fft.ifft(wmh)
        delta = np.max(np.abs(wm_new - wm))
        wm = wm_new
        if not np.isfinite(delta):
            raise IntegratorError("instability in tangent iteration", last_residual=delta)
        if delta < cfg.fp_tol:
            break
    else:
        raise IntegratorError(
            f"tangent fixed point not converged in {cfg.fp_max_iters} iterations",
            last_residual=delta)
    wmh = np.fft.fft(wm)
    ymh = (2.0 / dt) * (wmh - du0h)
    ym = np.fft.ifft(ymh)
    return TangentState(2.0 * wm - tangent.du, 2.0 * ym - tangent.dv, tangent.t + dt), it


def steps_for(t_span, dt, rtol=1e-9):
    """Number of steps covering t_span; t_span/dt must be integral within rtol."""
    ratio = t_span / dt
    n = round(ratio)
    if abs(ratio - n) > rtol * max(1.0, abs(ratio)):
        raise ConfigError(f"time span {t_span} is not an integer multiple of dt={dt}")
    return n


def simulate(initial, params, grid, cfg, t_end, sample_every=1, observers=None,
             reference=None):
    """March midpoint steps from initial.t to t_end.

    Diagnostics are recorded every ``sample_every`` steps (fields of
    DiagnosticsRecord; err_u/err_v only when ``reference`` is given as a
    callable t -> (u_ref, v_ref)).  Observers are called as observer(state,
    iters) at sampled steps.  Returns (final_state, records).
    """
    from .conserved import DiagnosticsRecord, hamiltonian_h, invariant_i1, invariant_i2

    if sample_every < 1:
        raise ConfigError(f"sample_every must be >= 1, got {sample_every}")
    if t_end < initial.t:
        raise ConfigError(f"t_end={t_end} precedes initial time {initial.t}")
    nsteps = steps_for(t_end - initial.t, cfg.dt)
    stepper = MidpointStepper(params, grid, cfg)
    state = initial
    t0 = initial.t
    records = []
    for s in range(1, nsteps + 1):
        try:
            state, iters = stepper.step(state)
        except IntegratorError as e:
            raise IntegratorError(str(e), step_index=s, last_residual=e.last_residual) from None
        state.t = t0 + s * cfg.dt
        if s % sample_every == 0 or s == nsteps:
            rec = DiagnosticsRecord(
                t=state.t,
                hamiltonian=hamiltonian_h(state, params, grid),
                i1=invariant_i1(state, params, grid),
                i2=invariant_i2(state, params, grid),
                l2_norm=float(np.sqrt(grid.h) * np.linalg.norm(state.u)),
                fp_iters=iters,
            )
            if reference is not None:
                u_ref, v_ref = reference(state.t)
                rec.err_u = float(np.linalg.norm(state.u - u_ref) / np.linalg.norm(u_ref))
                rec.err_v = float(np.linalg.norm(state.v - v_ref) / np.linalg.norm(v_ref))
            records.append(rec)
            if observers:
                for obs in observers:
                    obs(state, iters)
    return state, records
