"""Explicit solutions for the convective, temperature and flux problems.

Each front coefficient is the root of a monotone transcendental equation,
written here as an increasing objective ``lhs(x) - rhs(x)`` and handed
to :func:`numerics.find_root_increasing`.

Problem labels:

* ``P1`` -- convective face, ``k T_x(0,t) = h0/sqrt(t) (T(0,t) + D_inf)``
* ``P2`` -- prescribed face temperature ``T(0,t) = -D0``
* ``P3`` -- prescribed face flux ``k T_x(0,t) = q0/sqrt(t)``
* ``P1Limit`` -- ``P1`` as ``h0 -> inf``, i.e. ``P2`` with ``D0 = D_inf``
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import numerics
from .errors import NoRoot, NoSignChange, Subcritical, XiOverflow
from .model import (
    Convective,
    Flux,
    Kind,
    Material,
    MushySolution,
    MushyZone,
    Temperature,
    validate,
)

XI_CAP = 25.0
SQRT_PI = math.sqrt(math.pi)

# objectives are finite at x = 0 in the forms below, so brackets start there
_BRACKET = numerics.Bracket(0.0, 1.0)


def critical_h0(m: Material, z: MushyZone, d_inf: float) -> float:
    """Smallest convective coefficient admitting a solution (exclusive)."""
    return math.sqrt(z.gamma * (1.0 - z.epsilon) * m.rho * m.latent_heat * m.k / 2.0) / d_inf


def critical_q0(m: Material, z: MushyZone) -> float:
    """Smallest flux coefficient admitting a solution (exclusive)."""
    return math.sqrt(z.gamma * (1.0 - z.epsilon) * m.rho * m.latent_heat * m.k / 2.0)


def _conv_offset(h0, m):
    # k / (h0 sqrt(pi alpha))
    return m.k / (h0 * math.sqrt(math.pi * m.alpha))


def f_conv(x, h0, m: Material):
    """exp(-x^2) / (k/(h0 sqrt(pi alpha)) + erf(x)); decreasing from h0 sqrt(pi alpha)/k."""
    with np.errstate(under="ignore"):
        return (np.exp(-np.square(x)) / (_conv_offset(h0, m) + numerics.erf(x)))[()]


def g_conv(x, h0, d_inf, m: Material, z: MushyZone):
    """x + gamma (1-eps) sqrt(pi) / (2 D_inf F(x)); increasing."""
    inv_f = _inv_f_conv(x, h0, m)
    return (np.asarray(x) + z.gamma * (1.0 - z.epsilon) * SQRT_PI / (2.0 * d_inf) * inv_f)[()]


def _inv_f_conv(x, h0, m):
    with np.errstate(over="ignore"):
        return np.exp(np.square(x)) * (_conv_offset(h0, m) + numerics.erf(x))


def f_inf(x):
    """exp(-x^2) / erf(x), the h0 -> inf limit of :func:`f_conv`; diverges at 0+."""
    with np.errstate(under="ignore", divide="ignore"):
        return (np.exp(-np.square(x)) / numerics.erf(x))[()]


def g_inf(x, d, m: Material, z: MushyZone):
    """x + gamma (1-eps) sqrt(pi) / (2 d F_inf(x)), for bulk or face magnitude ``d``."""
    with np.errstate(over="ignore"):
        inv = np.exp(np.square(x)) * numerics.erf(x)
    return (np.asarray(x) + z.gamma * (1.0 - z.epsilon) * SQRT_PI / (2.0 * d) * inv)[()]


def g_temp(x, d, m: Material, z: MushyZone):
    """g_inf / f_inf, expanded so it is finite at 0 (where it vanishes).

    With ``d = D_inf`` this is the limit-problem function; with ``d = D0``
    it is the temperature-problem function. They are the same function of
    the magnitude.
    """
    with np.errstate(over="ignore", invalid="ignore"):
        inv = np.exp(np.square(x)) * numerics.erf(x)
        return (np.asarray(x) * inv + z.gamma * (1.0 - z.epsilon) * SQRT_PI / (2.0 * d) * inv * inv)[()]


def g_flux(x, q0, m: Material, z: MushyZone):
    """[x + gamma (1-eps) k exp(x^2) / (2 q0 sqrt(alpha))] exp(x^2); increasing from its value at 0."""
    with np.errstate(over="ignore"):
        e = np.exp(np.square(x))
        return ((np.asarray(x) + z.gamma * (1.0 - z.epsilon) * m.k * e / (2.0 * q0 * math.sqrt(m.alpha))) * e)[()]


@dataclass(frozen=True)
class TranscendentalEq:
    """``lhs(x) = rhs(x)`` on x > 0, with ``objective = lhs - rhs`` increasing."""

    lhs: Callable[[float], float]
    rhs: Callable[[float], float]
    description: str

    def objective(self, x):
        return self.lhs(x) - self.rhs(x)


def equation_p1(m: Material, z: MushyZone, bc: Convective) -> TranscendentalEq:
    scale = bc.d_inf * m.c / (m.latent_heat * SQRT_PI)
    return TranscendentalEq(
        lhs=lambda x: g_conv(x, bc.h0, bc.d_inf, m, z),
        rhs=lambda x: scale * f_conv(x, bc.h0, m),
        description="convective",
    )


def equation_temperature(m: Material, z: MushyZone, d: float, description="temperature") -> TranscendentalEq:
    const = d * m.c / (m.latent_heat * SQRT_PI)
    return TranscendentalEq(
        lhs=lambda x: g_temp(x, d, m, z),
        rhs=lambda x: const,
        description=description,
    )


def equation_p3(m: Material, z: MushyZone, bc: Flux) -> TranscendentalEq:
    const = bc.q0 / (m.rho * m.latent_heat * math.sqrt(m.alpha))
    return TranscendentalEq(
        lhs=lambda x: g_flux(x, bc.q0, m, z),
        rhs=lambda x: const,
        description="flux",
    )


def _solve_root(eq: TranscendentalEq) -> float:
    try:
        xi = numerics.find_root_increasing(eq.objective, _BRACKET, numerics.ROOT_TOL)
    except NoSignChange as exc:
        raise NoRoot(f"{eq.description}: {exc}") from exc
    xi = float(xi)
    if xi <= 0.0:
        raise NoRoot(f"{eq.description}: root not positive; data within rounding of the threshold")
    if xi > XI_CAP:
        raise XiOverflow(f"{eq.description}: xi={xi!r} exceeds the cap {XI_CAP}")
    return xi


def solve_p1(m: Material, z: MushyZone, bc: Convective) -> MushySolution:
    """Convective face. Raises Subcritical iff ``h0 <= critical_h0``."""
    validate(m, z, bc)
    threshold = critical_h0(m, z, bc.d_inf)
    if bc.h0 <= threshold:
        raise Subcritical("h0", bc.h0, threshold)
    xi = _solve_root(equation_p1(m, z, bc))
    a = _conv_offset(bc.h0, m)
    erf_xi = numerics.erf(xi)
    mu = xi + z.gamma * SQRT_PI / (2.0 * bc.d_inf) * math.exp(xi * xi) * (a + erf_xi)
    c2 = bc.d_inf / (a + erf_xi)
    return MushySolution(Kind.P1, xi, mu, -c2 * erf_xi, c2, m, z, bc)


def _solve_temperature(m, z, d, kind, description):
    d = float(d)
    xi = _solve_root(equation_temperature(m, z, d, description))
    erf_xi = numerics.erf(xi)
    mu = xi + z.gamma * SQRT_PI / (2.0 * d) * math.exp(xi * xi) * erf_xi
    return MushySolution(kind, xi, mu, -d, d / erf_xi, m, z, Temperature(d))


def solve_p2(m: Material, z: MushyZone, bc: Temperature) -> MushySolution:
    """Prescribed face temperature ``-D0``.

    The objective vanishes at 0 and grows without bound, so a root exists
    for every ``D0 > 0``; NoRoot only signals a failed bracket.
    """
    validate(m, z, bc)
    return _solve_temperature(m, z, bc.d0, Kind.P2, "temperature")


def solve_p1_limit(m: Material, z: MushyZone, d_inf: float) -> MushySolution:
    """h0 -> inf limit of the convective problem (face held at ``-D_inf``)."""
    validate(m, z, Temperature(d_inf))
    return _solve_temperature(m, z, d_inf, Kind.P1_LIMIT, "limit")


def solve_p3(m: Material, z: MushyZone, bc: Flux) -> MushySolution:
    """Prescribed flux. Raises Subcritical iff ``q0 <= critical_q0``."""
    validate(m, z, bc)
    threshold = critical_q0(m, z)
    if bc.q0 <= threshold:
        raise Subcritical("q0", bc.q0, threshold)
    omega = _solve_root(equation_p3(m, z, bc))
    nu = omega + z.gamma * m.k / (2.0 * bc.q0 * math.sqrt(m.alpha)) * math.exp(omega * omega)
    a2 = bc.q0 * math.sqrt(math.pi * m.alpha) / m.k
    return MushySolution(Kind.P3, omega, nu, -a2 * numerics.erf(omega), a2, m, z, bc)


def solve(m: Material, z: MushyZone, bc) -> MushySolution:
    """Dispatch on the boundary-condition variant."""
    if isinstance(bc, Convective):
        return solve_p1(m, z, bc)
    if isinstance(bc, Flux):
        return solve_p3(m, z, bc)
    if isinstance(bc, Temperature):
        return solve_p2(m, z, bc)
    raise TypeError(f"unknown boundary condition {bc!r}")


def threshold(m: Material, z: MushyZone, bc):
    """Existence threshold for ``bc`` (None for the temperature problem)."""
    if isinstance(bc, Convective):
        return critical_h0(m, z, bc.d_inf)
    if isinstance(bc, Flux):
        return critical_q0(m, z)
    return None


def temperature(sol: MushySolution, x, t):
    return sol.temperature(x, t)


def front_s(sol: MushySolution, t):
    return sol.front_s(t)


def front_r(sol: MushySolution, t):
    return sol.front_r(t)
