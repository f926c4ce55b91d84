"""Numerical checks that a solution satisfies its governing conditions.

All residuals are returned in scale-free form:

* heat equation: ``max |T_t - alpha T_xx| * t / D``
* front energy balance: relative to ``rho l (eps s' + (1-eps) r')``
* mushy width: relative to ``gamma``
* face condition: relative to the face data (``h0 D_inf / sqrt(t)``,
  ``q0 / sqrt(t)`` or ``D0``)

where ``D = -T(0, t)`` is the face temperature magnitude. Derivatives at the
fronts and the face are analytic; only the interior heat-equation residual
uses finite differences, evaluated in extended precision so that the
stencil's truncation error, not rounding, is what gets measured.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

import mpmath
import numpy as np

from . import numerics, solver
from .errors import KindMismatch
from .model import Convective, Flux, Kind, Material, MushySolution, MushyZone, Temperature

PDE_TOL = 1e-6
CLOSED_FORM_TOL = 1e-9
_HP_DPS = 40


@dataclass(frozen=True)
class GridSpec:
    t_values: Tuple[float, ...] = (0.01, 0.1, 1.0, 10.0, 100.0)
    x_fractions: Tuple[float, ...] = tuple(np.linspace(0.0, 1.0, 11))
    fd_step_scale: float = 1e-4

    def __post_init__(self):
        t = np.asarray(self.t_values, dtype=float)
        x = np.asarray(self.x_fractions, dtype=float)
        if np.any(t <= 0) or np.any(np.diff(t) < 0):
            raise ValueError("t_values must be positive and sorted")
        if np.any(x < 0) or np.any(x > 1) or np.any(np.diff(x) < 0):
            raise ValueError("x_fractions must be sorted within [0, 1]")
        if not self.fd_step_scale > 0:
            raise ValueError("fd_step_scale must be positive")

    def halved(self) -> "GridSpec":
        return GridSpec(self.t_values, self.x_fractions, self.fd_step_scale / 2)

    def describe(self) -> str:
        return (
            f"t in [{min(self.t_values):g}, {max(self.t_values):g}] ({len(self.t_values)} values), "
            f"{len(self.x_fractions)} fractions of s(t), fd step {self.fd_step_scale:g}"
        )


@dataclass(frozen=True)
class VerificationReport:
    """Maximum scale-free residual of each condition; ``None`` = not applicable."""

    max_pde_residual: float
    max_stefan_residual: float
    max_width_residual: Optional[float]
    max_bc_residual: float
    grid_spec: str
    thresholds: dict = field(
        default_factory=lambda: {"pde": PDE_TOL, "stefan": CLOSED_FORM_TOL, "width": CLOSED_FORM_TOL, "bc": CLOSED_FORM_TOL},
        compare=False,
    )

    def failures(self):
        values = {
            "pde": self.max_pde_residual,
            "stefan": self.max_stefan_residual,
            "width": self.max_width_residual,
            "bc": self.max_bc_residual,
        }
        return [name for name, v in values.items() if v is not None and not v <= self.thresholds[name]]

    @property
    def passed(self) -> bool:
        return not self.failures()


def temperature_scale(sol: MushySolution) -> float:
    return abs(sol.coeff_const)


def _front_gradient(sol, t):
    # left-limit dT/dx at x = s(t), from the solid-side profile
    t = np.asarray(t, dtype=float)
    return sol.coeff_erf * math.exp(-sol.xi * sol.xi) / np.sqrt(math.pi * sol.alpha * t)


def _face_gradient(sol, t):
    return sol.coeff_erf / np.sqrt(math.pi * sol.alpha * np.asarray(t, dtype=float))


def residual_heat_equation(sol: MushySolution, g: GridSpec = GridSpec()) -> float:
    """Central-difference residual of T_t - alpha T_xx at interior grid points."""
    worst = 0.0
    fractions = [f for f in g.x_fractions if 0.0 < f < 1.0]
    with mpmath.workdps(_HP_DPS):
        c1 = mpmath.mpf(sol.coeff_const)
        c2 = mpmath.mpf(sol.coeff_erf)
        alpha = mpmath.mpf(sol.alpha)

        def profile(x, t):
            return c1 + c2 * numerics.erf_hp(x / (2 * mpmath.sqrt(alpha * t)), _HP_DPS)

        for t_f in g.t_values:
            t = mpmath.mpf(t_f)
            s = 2 * mpmath.mpf(sol.xi) * mpmath.sqrt(alpha * t)
            hx = mpmath.mpf(g.fd_step_scale) * s
            ht = mpmath.mpf(g.fd_step_scale) * t
            for frac in fractions:
                x = mpmath.mpf(frac) * s
                centre = profile(x, t)
                t_t = (profile(x, t + ht) - profile(x, t - ht)) / (2 * ht)
                t_xx = (profile(x + hx, t) - 2 * centre + profile(x - hx, t)) / (hx * hx)
                r = abs(t_t - alpha * t_xx) * t / temperature_scale(sol)
                worst = max(worst, float(r))
    return worst


def residual_stefan(sol: MushySolution, z: Optional[MushyZone] = None, m: Optional[Material] = None,
                    t_values: Sequence[float] = GridSpec.t_values) -> float:
    """Energy balance at s(t): k T_x = rho l (eps s' + (1 - eps) r')."""
    z = z or sol.mushy
    m = m or sol.material
    t = np.asarray(t_values, dtype=float)
    lhs = m.k * _front_gradient(sol, t)
    rhs = m.rho * m.latent_heat * (z.epsilon * sol.xi + (1.0 - z.epsilon) * sol.mu) * np.sqrt(m.alpha / t)
    return float(np.max(np.abs(lhs - rhs) / np.abs(rhs)))


def residual_mushy_width(sol: MushySolution, z: Optional[MushyZone] = None,
                         t_values: Sequence[float] = GridSpec.t_values) -> Optional[float]:
    """T_x(s(t), t) (r(t) - s(t)) against gamma; ``None`` when gamma = 0."""
    z = z or sol.mushy
    if z.gamma == 0.0:
        return None
    t = np.asarray(t_values, dtype=float)
    product = _front_gradient(sol, t) * (sol.front_r(t) - sol.front_s(t))
    return float(np.max(np.abs(product - z.gamma)) / z.gamma)


def residual_boundary(sol: MushySolution, bc, m: Optional[Material] = None,
                      t_values: Sequence[float] = GridSpec.t_values) -> float:
    """Residual of the fixed-face condition ``bc``.

    A temperature condition may be checked against any solution (that is
    how equivalence is tested); convective and flux conditions only against
    solutions of their own kind.
    """
    m = m or sol.material
    t = np.asarray(t_values, dtype=float)
    face_temp = sol.coeff_const
    if isinstance(bc, Temperature):
        return abs(face_temp + bc.d0) / bc.d0
    if isinstance(bc, Convective):
        if sol.kind is not Kind.P1:
            raise KindMismatch(f"convective condition against a {sol.kind.value} solution")
        lhs = m.k * _face_gradient(sol, t)
        rhs = bc.h0 / np.sqrt(t) * (face_temp + bc.d_inf)
        return float(np.max(np.abs(lhs - rhs) / (bc.h0 * bc.d_inf / np.sqrt(t))))
    if isinstance(bc, Flux):
        if sol.kind is not Kind.P3:
            raise KindMismatch(f"flux condition against a {sol.kind.value} solution")
        lhs = m.k * _face_gradient(sol, t)
        rhs = bc.q0 / np.sqrt(t)
        return float(np.max(np.abs(lhs - rhs) / rhs))
    raise KindMismatch(f"unknown boundary condition {bc!r}")


def classical_limit_check(m: Material, ste: float) -> Tuple[float, float]:
    """Compare the gamma = 0 temperature problem with the classical Neumann root.

    The classical root solves ``sqrt(pi) x exp(x^2) erf(x) = ste`` and is
    found here by plain bisection, independently of the solver's bracketing.
    Returns ``(xi_classical, |xi_classical - xi_solver|)``.
    """
    d0 = ste * m.latent_heat / m.c
    sol = solver.solve_p2(m, MushyZone(0.0, 0.5), Temperature(d0))

    def neumann(x):
        return math.sqrt(math.pi) * x * math.exp(x * x) * numerics.erf(x) - ste

    hi = 1.0
    while neumann(hi) < 0:
        hi *= 2.0
    xi_classical = numerics.bisect(neumann, 0.0, hi, iterations=80)
    return xi_classical, abs(xi_classical - sol.xi)


def full_report(sol: MushySolution, bc=None, m: Optional[Material] = None, z: Optional[MushyZone] = None,
                g: GridSpec = GridSpec()) -> VerificationReport:
    """Every residual at once; ``bc`` defaults to the solution's own."""
    bc = bc if bc is not None else sol.bc
    m = m or sol.material
    z = z or sol.mushy
    return VerificationReport(
        max_pde_residual=residual_heat_equation(sol, g),
        max_stefan_residual=residual_stefan(sol, z, m, g.t_values),
        max_width_residual=residual_mushy_width(sol, z, g.t_values),
        max_bc_residual=residual_boundary(sol, bc, m, g.t_values),
        grid_spec=g.describe(),
    )


def perturbed(sol: MushySolution, field_name: str = "coeff_erf", rel: float = 0.01) -> MushySolution:
    """Copy of ``sol`` with one field scaled by ``1 + rel``, skipping invariant checks."""
    data = {name: getattr(sol, name) for name in
            ("kind", "xi", "mu", "coeff_const", "coeff_erf", "material", "mushy", "bc")}
    data[field_name] = data[field_name] * (1.0 + rel)
    return MushySolution.unchecked(**data)
