"""
Solidification with a mushy region
==================================

A liquid at its melting point fills x > 0. Cooling the face x = 0 grows a
solid layer 0 < x < s(t) followed by a mushy region s(t) < x < r(t). Both
fronts move like sqrt(t); the solver only has to find their coefficients.
"""
# %%
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from mushystefan import Convective, Flux, Material, MushyZone, Temperature, solve_p1, solve_p2, solve_p3

# %% [markdown]
# Roughly paraffin-like numbers. gamma sets how wide the mushy region gets.

# %%
wax = Material(k=0.2, rho=800.0, c=2000.0, latent_heat=2.0e5)
zone = MushyZone(gamma=5.0, epsilon=0.5)

convective = solve_p1(wax, zone, Convective(h0=1000.0, d_inf=20.0))
fixed = solve_p2(wax, zone, Temperature(d0=20.0))
flux = solve_p3(wax, zone, Flux(q0=2.0e4))

for name, sol in (("convective face", convective), ("fixed face temperature", fixed), ("imposed flux", flux)):
    print(f"{name:24s} xi = {sol.xi:.6f}  mu = {sol.mu:.6f}  T(0,t) = {sol.fixed_face_temperature:.4f}")

# %% [markdown]
# The fixed temperature face always solidifies fastest for the same bulk
# temperature: the convective face only reaches part of -D_inf.

# %%
t = np.linspace(0.0, 3600.0 * 24, 400)
fig, ax = plt.subplots(figsize=(6, 4))
for sol, colour in ((convective, "C0"), (fixed, "C1")):
    ax.plot(t / 3600, 100 * sol.front_s(t), color=colour, label=f"s(t), {sol.kind.value}")
    ax.plot(t / 3600, 100 * sol.front_r(t), color=colour, ls="--", label=f"r(t), {sol.kind.value}")
ax.set_xlabel("time (h)")
ax.set_ylabel("position (cm)")
ax.legend()
fig.tight_layout()
fig.savefig(Path(__file__).with_name("fronts.png"), dpi=120)

# %% [markdown]
# Temperature in the solid at a few times, plotted against x / s(t): the
# profiles collapse, which is the similarity structure.

# %%
fig, ax = plt.subplots(figsize=(6, 4))
for hours in (1, 6, 24):
    tt = 3600.0 * hours
    x = np.linspace(0.0, convective.front_s(tt), 100)
    ax.plot(x / convective.front_s(tt), convective.temperature(x, tt), label=f"{hours} h")
ax.set_xlabel("x / s(t)")
ax.set_ylabel("T (degC below melting)")
ax.legend()
fig.tight_layout()
fig.savefig(Path(__file__).with_name("profiles.png"), dpi=120)
