"""
linear_propagator.py
--------------------
Per-mode multiplier of the exact linear flow.  Below the confluent
frequency xi_+ = 1/(2*sqrt(beta*kappa)) both eigenvalues are imaginary and
every mode is oscillatory; above it one eigenvalue gains a positive real
part and the mode grows exponentially.  The evaluation stays accurate
through the confluence itself, where the generator is a Jordan block.
"""
import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from npnls import DetunedCubic, ModelParams, linear_multiplier, xi_plus

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

kappa, beta = 0.3, 0.5
params = ModelParams(kappa, beta, DetunedCubic(0.0, 0.0, kappa))
xp = xi_plus(params)
print(f"kappa = {kappa}, beta = {beta}  ->  xi_+ = {xp:.6f}")

# semigroup property: m(t1 + t2) = m(t2) @ m(t1), checked at one mode
m1 = linear_multiplier(2.0, 0.4, params)
m2 = linear_multiplier(2.0, 0.9, params)
m12 = linear_multiplier(2.0, 1.3, params)
gap = np.max(np.abs(m12 - m2 @ m1))
print(f"semigroup defect at xi = 2.0: {gap:.3e}")

xis = np.linspace(0.0, 2.5 * xp, 600)
fig, ax = plt.subplots(figsize=(7, 4.5))
for t in (0.5, 1.0, 2.0):
    norms = [np.linalg.norm(linear_multiplier(xi, t, params), 2) for xi in xis]
    ax.semilogy(xis, norms, label=f"t = {t}")
ax.axvline(xp, color="k", ls="--", lw=0.8)
ax.text(xp, ax.get_ylim()[1], " xi_+", va="top")
ax.set_xlabel("xi")
ax.set_ylabel("spectral norm of m(xi, t)")
ax.set_title("oscillatory band vs growth band of the linear flow")
ax.legend()
fig.tight_layout()
path = os.path.join(OUT, "linear_propagator.png")
fig.savefig(path, dpi=120)
print(f"wrote {path}")
