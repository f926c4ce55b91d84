"""Explicit mushy-zone solutions of the one-phase Stefan problem.

Solid grows from a fixed face x = 0 into liquid held at the melting
temperature 0; an isothermal mushy region separates the solid front s(t)
from the liquid front r(t). The face carries a convective, flux or
temperature condition.
"""
from .errors import (
    DegenerateBound,
    KindMismatch,
    MushyStefanError,
    NoRoot,
    NoSignChange,
    OutOfDomain,
    Subcritical,
    ValidationError,
    XiOverflow,
)
from .model import (
    Convective,
    Flux,
    Kind,
    Material,
    MushySolution,
    MushyZone,
    Temperature,
    alpha,
    validate,
)
from .solver import (
    critical_h0,
    critical_q0,
    solve,
    solve_p1,
    solve_p1_limit,
    solve_p2,
    solve_p3,
)
from .equivalence import check_equivalence, d0_from_convective, d0_from_flux, xi_bound
from .asymptotics import convergence_study
from .verify import GridSpec, full_report

__version__ = "0.1.0"
