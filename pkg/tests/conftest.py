import math

import numpy as np
import pytest

from mushystefan import Convective, Flux, Material, MushyZone, Temperature

# Frozen from tests/oracles.py (dense sign scan + 80-step mpmath bisection).
GOLDEN = {
    "erf_1": 0.8427007929497149,
    "erfinv_half": 0.4769362762044699,
    "p1_xi": 0.5821186425704858,
    "p2_xi": 0.6049676795541009,
    "p3_xi": 0.8855640470261765,
    "p3_xi_q4": 1.1197439725992362,
    "neumann_0.1": 0.22001627274293786,
    "neumann_1.0": 0.6200626333135955,
    "neumann_10.0": 1.2569721212792033,
    "neumann_1e-6": 0.0007071066633354625,
}

UNIT = Material(1.0, 1.0, 1.0, 1.0)
ZONE = MushyZone(0.1, 0.5)
P1_BC = Convective(10.0, 1.0)
P2_BC = Temperature(1.0)
P3_BC = Flux(2.0)


def _loguniform(rng, lo, hi):
    return float(math.exp(rng.uniform(math.log(lo), math.log(hi))))


def random_case(rng):
    """Log-uniform material, mushy zone and bulk temperature over sane ranges."""
    m = Material(
        k=_loguniform(rng, 0.1, 100.0),
        rho=_loguniform(rng, 100.0, 1e4),
        c=_loguniform(rng, 100.0, 5000.0),
        latent_heat=_loguniform(rng, 1e4, 1e6),
    )
    z = MushyZone(gamma=_loguniform(rng, 0.01, 10.0), epsilon=float(rng.uniform(0.05, 0.95)))
    d_inf = _loguniform(rng, 1.0, 100.0)
    return m, z, d_inf


@pytest.fixture
def rng():
    return np.random.default_rng(20261018)


@pytest.fixture
def golden():
    return dict(GOLDEN)
