"""Experiment orchestration and deterministic CSV/JSON emission.

Float cells use Python's repr (shortest round-trip); rows end with "\\n";
identical configs produce byte-identical files.  On failure, partially
written outputs are removed.
"""

import csv
import json
import math
import os

import numpy as np

from .analysis import (SolitonSpec, continuous_dispersion_residual,
                       numerical_dispersion_residual, numerical_dispersion_roots,
                       plane_wave_omega, soliton_state_arrays,
                       soliton_time_derivatives, soliton_value)
from .conserved import local_conservation_residuals
from .errors import ConfigError
from .stepping import (FieldState, MidpointStepper, StepperConfig,
                       exact_linear_step, simulate, steps_for)
from .config import load_state_json, save_state_json


def _fmt(x):
    if x is None:
        return ""
    if isinstance(x, str):
        return x
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return repr(float(x))


class _OutputSet:
    """Tracks files created by one command so failures can clean them up."""

    def __init__(self, out_dir):
        self.out_dir = out_dir
        self.paths = []
        os.makedirs(out_dir, exist_ok=True)

    def path(self, name):
        p = os.path.join(self.out_dir, name)
        self.paths.append(p)
        return p

    def discard(self):
        for p in self.paths:
            if os.path.exists(p):
                os.remove(p)


def _write_csv(path, header, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([_fmt(c) for c in row])


def initial_state(config):
    """Initial (u, v) per config.initial; soliton and plane-wave data are
    analytic and mutually consistent (v = u_t of the exact solution)."""
    grid = config.grid
    if config.initial_kind == "soliton":
        spec = SolitonSpec(config.initial_eta, config.initial_vel, config.params.kappa)
        u, v = soliton_state_arrays(spec, grid)
        return FieldState(u, v, 0.0)
    if config.initial_kind == "plane_wave":
        A = config.initial_amplitude
        k = 2.0 * math.pi * config.initial_mode / (grid.b - grid.a)
        omega = plane_wave_omega(k, A, config.params)
        u = A * np.exp(1j * k * (grid.nodes - grid.a))
        return FieldState(u, 1j * omega * u, 0.0)
    return load_state_json(config.initial_path, grid)


def reference_solution(config):
    """Callable t -> (u_ref, v_ref), or None when no exact reference exists.

    Soliton and plane-wave initial data are exact solutions; a file-based
    initial state has an exact reference only for the linear equation
    (detuned_cubic with delta = alpha = 0), via the multiplier propagator.
    """
    grid = config.grid
    if config.initial_kind == "soliton":
        spec = SolitonSpec(config.initial_eta, config.initial_vel, config.params.kappa)

        def ref(t):
            u = soliton_value(grid.nodes, t, spec)
            v, _ = soliton_time_derivatives(grid.nodes, t, spec)
            return u, v

        return ref
    if config.initial_kind == "plane_wave":
        A = config.initial_amplitude
        k = 2.0 * math.pi * config.initial_mode / (grid.b - grid.a)
        omega = plane_wave_omega(k, A, config.params)
        base = A * np.exp(1j * k * (grid.nodes - grid.a))

        def ref(t):
            u = base * np.exp(1j * omega * t)
            return u, 1j * omega * u

        return ref
    model = config.model
    if model.tag == "detuned_cubic" and model.delta == 0.0 and model.alpha == 0.0:
        init = initial_state(config)

        def ref(t):
            out = exact_linear_step(init, config.params, grid, t - init.t)
            return out.u, out.v

        return ref
    return None


_TS_HEADER = ["t", "H", "I1", "I2", "l2_norm", "fp_iters", "err_u", "err_v"]


def run_simulate(config, out_dir):
    """Writes timeseries.csv and final_state.json; returns (state, records)."""
    outs = _OutputSet(out_dir)
    try:
        init = initial_state(config)
        cfg = StepperConfig(config.dt, config.fp_tol, config.fp_max_iters)
        state, records = simulate(init, config.params, config.grid, cfg,
                                  t_end=config.t_end,
                                  sample_every=config.sample_every,
                                  reference=reference_solution(config))
        rows = [[r.t, r.hamiltonian, r.i1, r.i2, r.l2_norm, r.fp_iters,
                 r.err_u, r.err_v] for r in records]
        _write_csv(outs.path("timeseries.csv"), _TS_HEADER, rows)
        save_state_json(outs.path("final_state.json"), state, config.grid)
        return state, records
    except Exception:
        outs.discard()
        raise


class ConvergenceReport:
    def __init__(self, dt_list, err_u, err_v, observed_orders, err_hamiltonian,
                 hamiltonian_orders, observed_orders_v):
        self.dt_list = dt_list
        self.err_u = err_u
        self.err_v = err_v
        self.observed_orders = observed_orders
        self.observed_orders_v = observed_orders_v
        self.err_hamiltonian = err_hamiltonian
        self.hamiltonian_orders = hamiltonian_orders

    def to_dict(self):
        return {
            "dt_list": self.dt_list,
            "err_u": self.err_u,
            "err_v": self.err_v,
            "observed_orders": self.observed_orders,
            "observed_orders_v": self.observed_orders_v,
            "err_hamiltonian": self.err_hamiltonian,
            "hamiltonian_orders": self.hamiltonian_orders,
        }


def run_converge(config, dt_list, out_dir):
    """One run per dt against the exact reference; emits convergence.csv and
    convergence.json.  dt_list must decrease by exact factors of 2."""
    for i in range(len(dt_list) - 1):
        if abs(dt_list[i] / dt_list[i + 1] - 2.0) > 1e-9:
            raise ConfigError(f"--dts must halve at each entry, got {dt_list}")
    ref = reference_solution(config)
    if ref is None:
        raise ConfigError("converge needs an exact reference: soliton or "
                          "plane_wave initial data, or the linear model")
    outs = _OutputSet(out_dir)
    try:
        err_u, err_v, err_H = [], [], []
        for dt in dt_list:
            cfg = StepperConfig(dt, config.fp_tol, config.fp_max_iters)
            sample_every = max(1, round(1.0 / (10.0 * dt)))
            init = initial_state(config)
            state, records = simulate(init, config.params, config.grid, cfg,
                                      t_end=config.t_end, sample_every=sample_every,
                                      reference=ref)
            err_u.append(records[-1].err_u)
            err_v.append(records[-1].err_v)
            from .conserved import hamiltonian_h
            H0 = hamiltonian_h(init, config.params, config.grid)
            err_H.append(max(abs(r.hamiltonian - H0) / abs(H0) for r in records))
        orders_u = [math.log2(err_u[i] / err_u[i + 1]) for i in range(len(dt_list) - 1)]
        orders_v = [math.log2(err_v[i] / err_v[i + 1]) for i in range(len(dt_list) - 1)]
        orders_H = [math.log2(err_H[i] / err_H[i + 1]) for i in range(len(dt_list) - 1)]
        report = ConvergenceReport(list(dt_list), err_u, err_v, orders_u, err_H,
                                   orders_H, orders_v)
        rows = [[dt_list[i], err_u[i], err_v[i], err_H[i]] for i in range(len(dt_list))]
        _write_csv(outs.path("convergence.csv"),
                   ["dt", "err_u", "err_v", "err_hamiltonian"], rows)
        with open(outs.path("convergence.json"), "w") as fh:
            json.dump(report.to_dict(), fh, indent=1, sort_keys=True)
            fh.write("\n")
        return report
    except Exception:
        outs.discard()
        raise


def run_dispersion(config, out_dir, nonlinear=False):
    """Residual scan over (xi, omega_t) plus bisection-extracted roots of the
    numerical relation; one CSV, "kind" column distinguishes scan/root rows.
    The continuous_residual column evaluates the continuous relation at
    (xi/h, omega_t/dt) for reference."""
    outs = _OutputSet(out_dir)
    try:
        h, dt = config.grid.h, config.dt
        amp = 1.0 if nonlinear else 0.0
        xis = np.linspace(config.xi_min, config.xi_max, config.resolution)
        oms = np.linspace(config.omega_min, config.omega_max, config.resolution)
        rows = []
        for xi in xis:
            for om in oms:
                res = numerical_dispersion_residual(float(xi), float(om), nonlinear,
                                                    config.params, h, dt)
                cres = continuous_dispersion_residual(float(xi) / h, float(om) / dt,
                                                      amp, config.params)
                rows.append(["scan", float(xi), float(om), res, cres])
        for xi in xis:
            for root in numerical_dispersion_roots(float(xi), config.params, h, dt,
                                                   nonlinear=nonlinear):
                res = numerical_dispersion_residual(float(xi), root, nonlinear,
                                                    config.params, h, dt)
                cres = continuous_dispersion_residual(float(xi) / h, root / dt,
                                                      amp, config.params)
                rows.append(["root", float(xi), root, res, cres])
        _write_csv(outs.path("dispersion.csv"),
                   ["kind", "xi", "omega_t", "residual", "continuous_residual"], rows)
        return rows
    except Exception:
        outs.discard()
        raise


def run_residuals(config, out_dir):
    """Local conservation-law residual norms along a midpoint trajectory.

    States are sampled every sample_every steps; each interior sample becomes
    the center of a three-point window.  Emits residuals.csv with max and
    (h-weighted) L2 norms of both residual fields."""
    outs = _OutputSet(out_dir)
    try:
        grid = config.grid
        init = initial_state(config)
        cfg = StepperConfig(config.dt, config.fp_tol, config.fp_max_iters)
        nsteps = steps_for(config.t_end - init.t, config.dt)
        if nsteps // config.sample_every < 2:
            raise ConfigError("residuals needs at least 3 sampled states "
                              "(t_end too short for sample_every)")
        stepper = MidpointStepper(config.params, grid, cfg)
        samples = [init]
        state = init
        for s in range(1, nsteps + 1):
            state, _ = stepper.step(state)
            state.t = init.t + s * config.dt
            if s % config.sample_every == 0:
                samples.append(state)
        sqh = math.sqrt(grid.h)
        rows = []
        for i in range(1, len(samples) - 1):
            eres, mres = local_conservation_residuals(
                (samples[i - 1], samples[i], samples[i + 1]), config.params, grid)
            rows.append([samples[i].t,
                         float(np.max(np.abs(eres))), sqh * float(np.linalg.norm(eres)),
                         float(np.max(np.abs(mres))), sqh * float(np.linalg.norm(mres))])
        _write_csv(outs.path("residuals.csv"),
                   ["t", "energy_max", "energy_l2", "momentum_max", "momentum_l2"],
                   rows)
        return rows
    except Exception:
        outs.discard()
        raise
