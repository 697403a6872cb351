"""
dispersion_scan.py
------------------
Dispersion relation of the discretization versus the continuous problem.
For each wavenumber the numerical roots omega_t are found by bisection on
(-pi, pi); rescaled by 1/dt they converge at second order to the two
continuous branches (a paraxial-like slow branch and a fast branch that
escapes to -1/kappa as kappa -> 0).
"""
import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from npnls import (DetunedCubic, ModelParams, continuous_dispersion_roots,
                   numerical_dispersion_residual, numerical_dispersion_roots)

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

params = ModelParams(0.3, 0.7, DetunedCubic(0.0, 0.0, 0.3))  # linear: f = 0
h, dt = 0.1, 0.05

# real roots require 4*kappa*beta*k^2 < 1, i.e. |k| < 1.091 here
ks = np.linspace(-1.0, 1.0, 121)
slow_c, fast_c = [], []
slow_n, fast_n = [], []
worst_residual = 0.0
for k in ks:
    s, f = continuous_dispersion_roots(k, 0.0, params)
    slow_c.append(s)
    fast_c.append(f)
    roots = numerical_dispersion_roots(k * h, params, h, dt)
    for r in roots:
        res = numerical_dispersion_residual(k * h, r, False, params, h, dt)
        worst_residual = max(worst_residual, res)
    omegas = sorted(r / dt for r in roots)
    slow_n.append(omegas[-1])   # slow branch sits above the fast one
    fast_n.append(omegas[0])

print(f"scanned {ks.size} wavenumbers, {2 * ks.size} roots")
print(f"worst root residual : {worst_residual:.3e}")
err_slow = np.max(np.abs(np.array(slow_n) - np.array(slow_c)))
print(f"max slow-branch gap between numerical and continuous: {err_slow:.3e}")

fig, ax = plt.subplots(figsize=(7, 4.5))
ax.plot(ks, slow_c, "C0-", lw=1.0, label="continuous slow")
ax.plot(ks, fast_c, "C1-", lw=1.0, label="continuous fast")
ax.plot(ks, slow_n, "C0.", ms=3, label="numerical slow (omega_t / dt)")
ax.plot(ks, fast_n, "C1.", ms=3, label="numerical fast")
ax.set_xlabel("k")
ax.set_ylabel("omega")
ax.set_title(f"dispersion branches, kappa = {params.kappa}, h = {h}, dt = {dt}")
ax.legend()
fig.tight_layout()
path = os.path.join(OUT, "dispersion_scan.png")
fig.savefig(path, dpi=120)
print(f"wrote {path}")
