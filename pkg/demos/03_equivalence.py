"""
Convective and flux faces as disguised fixed-temperature faces
==============================================================

Each solution has a constant face temperature T(0, t) = -D0. Solving the
fixed-temperature problem with that D0 reproduces the same fronts and the
same temperature field.
"""
# %%
from mushystefan import Convective, Flux, Material, MushyZone, check_equivalence, solve_p1, solve_p3
from mushystefan.equivalence import xi_bound
from mushystefan.numerics import erf

m = Material(k=0.5, rho=900.0, c=1800.0, latent_heat=1.5e5)
z = MushyZone(gamma=2.0, epsilon=0.6)

for sol in (solve_p1(m, z, Convective(h0=1000.0, d_inf=15.0)), solve_p3(m, z, Flux(q0=1.0e4))):
    rep = check_equivalence(sol)
    print(f"{sol.kind.value}: D0 = {rep.d0_induced:.6f}")
    print(f"    xi source {rep.xi_source:.15f}")
    print(f"    xi target {rep.xi_target:.15f}  (gap {rep.xi_gap:.1e})")
    print(f"    max temperature gap {rep.max_temp_gap:.1e}, front gap {rep.fronts_gap:.1e}")
    print(f"    erf(xi) = {erf(sol.xi):.6f} < bound {xi_bound(rep.d0_induced, z, m):.6f}")
