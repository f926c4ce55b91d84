"""
Large heat transfer coefficient
===============================

As h0 grows the convective face approaches a fixed-temperature face at
-D_inf, and xi approaches its limit like 1/h0.
"""
# %%
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from mushystefan import Material, MushyZone, convergence_study

table = convergence_study(Material(1, 1, 1, 1), MushyZone(0.1, 0.5), 1.0, 10 ** np.linspace(1, 6, 11))
print(f"xi_inf = {table.xi_infinity:.15f}")
print(f"fitted slope {table.fitted_slope:.4f} (expect -1)")
for row in table.rows:
    print(f"h0 = {row.h0:10.3e}  xi = {row.xi:.12f}  gap = {row.gap:.3e}")

# %%
fig, ax = plt.subplots(figsize=(5, 4))
ax.loglog(table.column("h0"), table.column("gap"), "o-", label="xi_inf - xi(h0)")
ax.loglog(table.column("h0"), np.exp(table.fitted_constant) * table.column("h0") ** table.fitted_slope,
          "k--", label=f"fit, slope {table.fitted_slope:.3f}")
ax.set_xlabel("h0")
ax.legend()
fig.tight_layout()
fig.savefig(Path(__file__).with_name("limit.png"), dpi=120)
