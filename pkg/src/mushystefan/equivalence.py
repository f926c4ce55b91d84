"""Mapping convective and flux data onto an equivalent face temperature.

A supercritical convective (or flux) solution keeps its face at a constant
temperature ``-D0``; imposing that temperature directly reproduces the same
fronts and profile. This module computes ``D0``, checks the reproduction,
and evaluates the resulting upper bound on ``erf(xi)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import numerics, solver
from .errors import DegenerateBound, KindMismatch
from .model import Convective, Flux, Kind, Material, MushySolution, MushyZone, Temperature

# geometric in t, uniform in x / s(t)
T_GRID = np.logspace(-2, 2, 50)
X_FRACTIONS = np.linspace(0.0, 1.0, 50)


@dataclass(frozen=True)
class EquivalenceReport:
    d0_induced: float
    xi_source: float
    xi_target: float
    max_temp_gap: float
    fronts_gap: float

    @property
    def xi_gap(self) -> float:
        return abs(self.xi_source - self.xi_target)

    def passed(self, xi_tol=1e-9, temp_rel_tol=1e-8) -> bool:
        return self.xi_gap <= xi_tol and self.max_temp_gap <= temp_rel_tol * self.d0_induced


def d0_from_convective(sol: MushySolution, bc: Convective, m: Material) -> float:
    """Face temperature magnitude induced by convective data."""
    erf_xi = numerics.erf(sol.xi)
    return bc.d_inf * erf_xi / (m.k / (bc.h0 * math.sqrt(math.pi * m.alpha)) + erf_xi)


def d0_from_flux(sol: MushySolution, bc: Flux, m: Material) -> float:
    """Face temperature magnitude induced by flux data."""
    return bc.q0 * math.sqrt(math.pi * m.alpha) / m.k * numerics.erf(sol.xi)


def induced_d0(sol: MushySolution) -> float:
    if sol.kind is Kind.P1:
        return d0_from_convective(sol, sol.bc, sol.material)
    if sol.kind is Kind.P3:
        return d0_from_flux(sol, sol.bc, sol.material)
    raise KindMismatch(f"no equivalence map from {sol.kind.value}")


def max_profile_gap(a: MushySolution, b: MushySolution, t_values=T_GRID, x_fractions=X_FRACTIONS):
    """Largest |T_a - T_b| over x = frac * min(s_a, s_b), t in ``t_values``."""
    t = np.asarray(t_values, dtype=float)[:, None]
    s = np.minimum(a.front_s(t), b.front_s(t))
    x = np.asarray(x_fractions, dtype=float)[None, :] * s
    return float(np.max(np.abs(a.temperature(x, t) - b.temperature(x, t))))


def max_front_gap(a: MushySolution, b: MushySolution, t_values=T_GRID):
    t = np.asarray(t_values, dtype=float)
    return float(max(np.max(np.abs(a.front_s(t) - b.front_s(t))), np.max(np.abs(a.front_r(t) - b.front_r(t)))))


def check_equivalence(source: MushySolution, m: Optional[Material] = None, z: Optional[MushyZone] = None) -> EquivalenceReport:
    """Solve the temperature problem at the induced D0 and compare with ``source``."""
    m = m or source.material
    z = z or source.mushy
    d0 = induced_d0(source)
    target = solver.solve_p2(m, z, Temperature(d0))
    return EquivalenceReport(
        d0_induced=d0,
        xi_source=source.xi,
        xi_target=target.xi,
        max_temp_gap=max_profile_gap(source, target),
        fronts_gap=max_front_gap(source, target),
    )


def xi_bound(d0: float, z: MushyZone, m: Material, d_inf: Optional[float] = None) -> float:
    """Upper bound on erf(xi) for the temperature problem at ``d0``.

    With ``d_inf`` the two-temperature form ``d_inf d0 / (d_inf - d0)`` is
    used in place of ``d0``; it needs ``d_inf > d0`` and is never the tighter
    of the two. The caller compares the bound with ``erf(xi)``.
    """
    if d_inf is not None and not d_inf > d0:
        raise DegenerateBound(f"d_inf={d_inf!r} must exceed d0={d0!r}")
    if z.gamma == 0.0:
        return math.inf
    root = math.sqrt(2.0 * m.c / (math.pi * z.gamma * (1.0 - z.epsilon) * m.latent_heat))
    if d_inf is None:
        return d0 * root
    return d_inf * d0 / (d_inf - d0) * root


def bound_holds(sol: MushySolution, d_inf: Optional[float] = None) -> bool:
    """erf(xi) < bound at the solution's face temperature magnitude."""
    d0 = -sol.fixed_face_temperature
    return numerics.erf(sol.xi) < xi_bound(d0, sol.mushy, sol.material, d_inf)
