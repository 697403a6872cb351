"""
convergence_study.py
--------------------
Second-order convergence of the midpoint scheme on the exact soliton:
halve dt four times, measure the terminal error in u and u_t, and fit
the observed order between consecutive runs.
"""
import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from npnls import (FieldState, ModelParams, PowerLaw, SolitonSpec,
                   StepperConfig, make_grid, simulate, soliton_state_arrays)

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

kappa = 1e-4
spec = SolitonSpec(eta=1.0, vel=1.0, kappa=kappa)
params = ModelParams(kappa, 0.5, PowerLaw(2))
grid = make_grid(-150.0, 50.0, 1000)
T = 20.0

u0, v0 = soliton_state_arrays(spec, grid, t=0.0)

def reference(t):
    return soliton_state_arrays(spec, grid, t=t)

dts = [0.2, 0.1, 0.05, 0.025]
errs_u, errs_v = [], []
for dt in dts:
    final, records = simulate(FieldState(u0.copy(), v0.copy()), params, grid,
                              StepperConfig(dt=dt), t_end=T,
                              sample_every=max(1, round(1.0 / dt)),
                              reference=reference)
    errs_u.append(records[-1].err_u)
    errs_v.append(records[-1].err_v)
    print(f"dt = {dt:<6} err_u = {errs_u[-1]:.4e}   err_v = {errs_v[-1]:.4e}")

orders_u = [np.log2(errs_u[i] / errs_u[i + 1]) for i in range(len(dts) - 1)]
orders_v = [np.log2(errs_v[i] / errs_v[i + 1]) for i in range(len(dts) - 1)]
print("observed orders (u)  :", " ".join(f"{p:.3f}" for p in orders_u))
print("observed orders (u_t):", " ".join(f"{p:.3f}" for p in orders_v))

fig, ax = plt.subplots(figsize=(6, 4.5))
ax.loglog(dts, errs_u, "o-", label="u")
ax.loglog(dts, errs_v, "s-", label="u_t")
# order-2 guide through the first u point
guide = errs_u[0] * (np.array(dts) / dts[0]) ** 2
ax.loglog(dts, guide, "k--", lw=0.8, label="slope 2")
ax.set_xlabel("dt")
ax.set_ylabel(f"relative l2 error at T = {T:.0f}")
ax.set_title("midpoint scheme, exact soliton reference")
ax.legend()
fig.tight_layout()
path = os.path.join(OUT, "convergence_study.png")
fig.savefig(path, dpi=120)
print(f"wrote {path}")
