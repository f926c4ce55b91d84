"""
When does a convective or flux face solidify anything?
======================================================

With a mushy region the face has to extract heat faster than a critical
rate, otherwise there is no similarity solution at all. Below the
threshold the solver raises ``Subcritical`` and says what the threshold is.
"""
# %%

from mushystefan import Convective, Flux, Material, MushyZone, Subcritical, solve_p1, solve_p3
from mushystefan.solver import critical_h0, critical_q0

m = Material(k=2.0, rho=1000.0, c=4000.0, latent_heat=3.3e5)
z = MushyZone(gamma=1.0, epsilon=0.3)
d_inf = 10.0

h_star = critical_h0(m, z, d_inf)
q_star = critical_q0(m, z)
print(f"h0* = {h_star:.6g}, q0* = {q_star:.6g}, q0* / (D_inf h0*) = {q_star / (d_inf * h_star):.15f}")

# %% [markdown]
# Just above the threshold xi starts from zero and grows quickly.

# %%
for factor in (0.5, 0.999, 1.001, 1.1, 2.0, 10.0):
    try:
        xi = solve_p1(m, z, Convective(factor * h_star, d_inf)).xi
        print(f"h0 = {factor:6.3f} h0*  ->  xi = {xi:.6e}")
    except Subcritical as exc:
        print(f"h0 = {factor:6.3f} h0*  ->  {exc}")

# %%
for factor in (0.9, 1.01, 3.0):
    try:
        print(f"q0 = {factor:4.2f} q0*  ->  omega = {solve_p3(m, z, Flux(factor * q_star)).xi:.6e}")
    except Subcritical as exc:
        print(f"q0 = {factor:4.2f} q0*  ->  {exc}")
