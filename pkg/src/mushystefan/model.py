"""Material data, mushy-zone parameters, boundary conditions and solutions.

Temperatures at the fixed face are stored as positive magnitudes (``d_inf``,
``d0``); evaluated temperatures in the solid are negative. SI units
throughout.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, fields
from typing import Optional, Union

import numpy as np

from . import numerics
from .errors import OutOfDomain, ValidationError


@dataclass(frozen=True)
class Material:
    """Thermal constants of the solid phase."""

    k: float
    rho: float
    c: float
    latent_heat: float

    @property
    def alpha(self) -> float:
        return self.k / (self.rho * self.c)


def alpha(m: Material) -> float:
    """Thermal diffusivity k / (rho c), in m^2/s."""
    return m.k / (m.rho * m.c)


@dataclass(frozen=True)
class MushyZone:
    """gamma: width-gradient product (degC); epsilon: latent heat fraction released at s(t)."""

    gamma: float
    epsilon: float

    @property
    def classical(self) -> bool:
        return self.gamma == 0.0


@dataclass(frozen=True)
class Convective:
    h0: float
    d_inf: float


@dataclass(frozen=True)
class Flux:
    q0: float


@dataclass(frozen=True)
class Temperature:
    d0: float


BoundaryCondition = Union[Convective, Flux, Temperature]


def _positive(name, value, what):
    if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
        raise ValidationError(name, f"{name} must be positive ({what}), got {value!r}")


def validate(m: Material, z: MushyZone, bc: Optional[BoundaryCondition] = None) -> None:
    """Check every sign and range constraint; raise on the first violation."""
    _positive("k", m.k, "thermal conductivity")
    _positive("rho", m.rho, "density")
    _positive("c", m.c, "specific heat")
    _positive("latent_heat", m.latent_heat, "latent heat")
    if not (math.isfinite(z.gamma) and z.gamma >= 0):
        raise ValidationError("gamma", f"gamma must be non-negative, got {z.gamma!r}")
    if not (0.0 < z.epsilon < 1.0):
        raise ValidationError("epsilon", f"epsilon out of (0,1): {z.epsilon!r}")
    if bc is None:
        return
    if isinstance(bc, Convective):
        _positive("h0", bc.h0, "heat transfer coefficient")
        _positive("d_inf", bc.d_inf, "bulk temperature magnitude")
    elif isinstance(bc, Flux):
        _positive("q0", bc.q0, "heat flux coefficient")
    elif isinstance(bc, Temperature):
        _positive("d0", bc.d0, "fixed-face temperature magnitude")
    else:
        raise ValidationError("bc", f"unknown boundary condition {bc!r}")


def _scalar_or_array(v):
    return float(v) if np.ndim(v) == 0 else v


class Kind(str, enum.Enum):
    P1 = "P1"
    P2 = "P2"
    P3 = "P3"
    P1_LIMIT = "P1Limit"


_KIND_BC = {
    Kind.P1: (Convective, Temperature),
    Kind.P1_LIMIT: (Convective, Temperature),
    Kind.P2: (Temperature,),
    Kind.P3: (Flux,),
}


@dataclass(frozen=True)
class MushySolution:
    """Similarity solution with a mushy region.

    ``s(t) = 2 xi sqrt(alpha t)``, ``r(t) = 2 mu sqrt(alpha t)`` and, in the
    solid ``0 <= x <= s(t)``,
    ``T = coeff_const + coeff_erf * erf(x / (2 sqrt(alpha t)))``.

    ``xi``/``mu`` hold the front coefficients whatever the boundary
    condition (``omega``/``nu`` for the flux problem, the limit coefficients
    for ``P1Limit``); ``kind`` records which problem produced them.
    """

    kind: Kind
    xi: float
    mu: float
    coeff_const: float
    coeff_erf: float
    material: Material
    mushy: MushyZone
    bc: BoundaryCondition
    checked: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        if self.checked:
            self._check()

    def _check(self):
        if not isinstance(self.bc, _KIND_BC[self.kind]):
            raise ValidationError("kind", f"{self.kind.value} cannot carry {type(self.bc).__name__}")
        if not (self.xi > 0 and math.isfinite(self.xi)):
            raise ValidationError("xi", f"xi must be positive, got {self.xi!r}")
        if self.mushy.gamma == 0.0:
            if self.mu != self.xi:
                raise ValidationError("mu", "mu must equal xi when gamma = 0")
        elif not self.mu > self.xi:
            raise ValidationError("mu", f"mu={self.mu!r} must exceed xi={self.xi!r} when gamma > 0")
        front = self.coeff_const + self.coeff_erf * numerics.erf(self.xi)
        if abs(front) > 1e-12 * abs(self.coeff_const):
            raise ValidationError("coeff_const", f"temperature at s(t) is {front!r}, not 0")
        if not self.coeff_const < 0 <= self.coeff_erf:
            raise ValidationError("coeff_erf", "profile coefficients must satisfy coeff_const < 0 <= coeff_erf")

    @classmethod
    def unchecked(cls, **kwargs):
        """Build a solution without invariant checks (for corrupted-solution tests)."""
        return cls(**kwargs, checked=False)

    def replace(self, **changes):
        data = {f.name: getattr(self, f.name) for f in fields(self)}
        data.update(changes)
        return type(self)(**data)

    @property
    def alpha(self) -> float:
        return self.material.alpha

    @property
    def fixed_face_temperature(self) -> float:
        """T(0, t), the same for every t > 0."""
        return self.coeff_const

    def front_s(self, t):
        return _scalar_or_array(2.0 * self.xi * np.sqrt(self.alpha * np.asarray(t, dtype=float)))

    def front_r(self, t):
        return _scalar_or_array(2.0 * self.mu * np.sqrt(self.alpha * np.asarray(t, dtype=float)))

    def _eta(self, x, t):
        x = np.asarray(x, dtype=float)
        t = np.asarray(t, dtype=float)
        if np.any(t <= 0):
            raise OutOfDomain("temperature needs t > 0")
        s = 2.0 * self.xi * np.sqrt(self.alpha * t)
        # a few ulps of slack so x = s(t) computed elsewhere is accepted
        if np.any(x < 0) or np.any(x > s * (1 + 8e-16)):
            raise OutOfDomain("x must lie in the solid region [0, s(t)]")
        return x / (2.0 * np.sqrt(self.alpha * t))

    def temperature(self, x, t):
        """T(x, t) in the solid region; raises OutOfDomain elsewhere."""
        eta = self._eta(x, t)
        return _scalar_or_array(self.coeff_const + self.coeff_erf * numerics.erf(eta))

    def temperature_gradient(self, x, t):
        """Analytic dT/dx in the solid region."""
        eta = self._eta(x, t)
        t = np.asarray(t, dtype=float)
        return _scalar_or_array(self.coeff_erf * np.exp(-eta * eta) / np.sqrt(math.pi * self.alpha * t))
