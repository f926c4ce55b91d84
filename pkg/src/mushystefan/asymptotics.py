"""Convergence of the convective solution to its h0 -> inf limit."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Sequence

import numpy as np

from . import numerics, solver
from .equivalence import max_profile_gap
from .model import Convective, Material, MushyZone

DEFAULT_H0 = tuple(10.0 ** np.linspace(1.0, 6.0, 11))
# gaps this close to the root tolerance carry no rate information
FIT_FLOOR = 1e3 * numerics.ROOT_TOL


@dataclass(frozen=True)
class ConvergenceRow:
    h0: float
    xi: float
    gap: float
    mu: float
    mu_gap: float
    field_gap: float


@dataclass(frozen=True)
class ConvergenceTable:
    rows: List[ConvergenceRow]
    xi_infinity: float
    mu_infinity: float
    fitted_slope: float
    fitted_constant: float = field(default=float("nan"))

    def column(self, name):
        return np.array([getattr(r, name) for r in self.rows])


def fit_loglog(x, y, floor=FIT_FLOOR):
    """Least-squares slope and intercept of log(y) against log(x), ignoring y <= floor."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    keep = y > floor
    if keep.sum() < 2:
        return float("nan"), float("nan")
    slope, intercept = np.polyfit(np.log(x[keep]), np.log(y[keep]), 1)
    return float(slope), float(intercept)


def convergence_study(m: Material, z: MushyZone, d_inf: float, h0_values: Sequence[float] = DEFAULT_H0) -> ConvergenceTable:
    """Solve the convective problem along ``h0_values`` and compare with the limit.

    ``fitted_constant`` is ``exp(intercept)``, i.e. the empirical ``C`` in
    ``gap ~ C h0**slope``.
    """
    h0_values = sorted(float(h) for h in h0_values)
    limit = solver.solve_p1_limit(m, z, d_inf)
    rows = []
    for h0 in h0_values:
        sol = solver.solve_p1(m, z, Convective(h0, d_inf))
        rows.append(
            ConvergenceRow(
                h0=h0,
                xi=sol.xi,
                gap=limit.xi - sol.xi,
                mu=sol.mu,
                mu_gap=abs(limit.mu - sol.mu),
                field_gap=max_profile_gap(sol, limit),
            )
        )
    slope, intercept = fit_loglog([r.h0 for r in rows], [r.gap for r in rows])
    return ConvergenceTable(rows, limit.xi, limit.mu, slope, float(np.exp(intercept)))
