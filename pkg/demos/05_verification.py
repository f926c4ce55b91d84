"""
Checking a solution against the governing equations
===================================================

Residuals of the heat equation (finite differences), the energy balance at
s(t), the mushy width condition and the face condition. A deliberately
damaged solution shows the checks are not vacuous.
"""
# %%
from mushystefan import Flux, Material, MushyZone, solve_p3
from mushystefan.verify import GridSpec, full_report, perturbed, residual_heat_equation

sol = solve_p3(Material(1, 1, 1, 1), MushyZone(0.1, 0.5), Flux(2.0))
for label, candidate in (("solution", sol), ("coeff_erf * 1.01", perturbed(sol, "coeff_erf", 0.01))):
    rep = full_report(candidate)
    print(f"{label:18s} pde {rep.max_pde_residual:.1e}  stefan {rep.max_stefan_residual:.1e}  "
          f"width {rep.max_width_residual:.1e}  bc {rep.max_bc_residual:.1e}  passed={rep.passed}")

# %% [markdown]
# The finite-difference residual is second order: halving the step
# divides it by four.

# %%
g = GridSpec()
print("halving ratio:", residual_heat_equation(sol, g) / residual_heat_equation(sol, g.halved()))
