import numpy as np
import pytest

from mushystefan import Convective, MushyZone
from mushystefan.asymptotics import DEFAULT_H0, convergence_study, fit_loglog
from mushystefan.errors import Subcritical
from mushystefan.solver import solve_p1, solve_p1_limit

import oracles
from conftest import UNIT, ZONE, random_case


@pytest.fixture(scope="module")
def table():
    return convergence_study(UNIT, ZONE, 1.0)


def test_default_sweep():
    assert len(DEFAULT_H0) == 11
    assert DEFAULT_H0[0] == pytest.approx(10.0) and DEFAULT_H0[-1] == pytest.approx(1e6)


def test_gaps_positive(table):
    small = convergence_study(UNIT, ZONE, 1.0, [10.0, 1e2, 1e3, 1e4])
    assert all(r.gap > 0 for r in small.rows)
    assert all(r.gap > 0 for r in table.rows)


def test_gaps_non_increasing(table):
    gaps = table.column("gap")
    assert np.all(np.diff(gaps) <= 0)
    assert np.all(np.diff(table.column("h0")) > 0)


def test_slope_near_minus_one(table):
    assert table.fitted_slope == pytest.approx(-1.0, abs=0.1)
    assert table.fitted_constant > 0


def test_huge_h0_matches_limit_oracle():
    xi_inf, _ = oracles.dense_scan_root(*oracles.p2_equation(1, 1, 1, 1, 0.1, 0.5, 1.0))
    xi = solve_p1(UNIT, ZONE, Convective(1e12, 1.0)).xi
    assert abs(xi - xi_inf) <= 1e-9


def test_xi_increasing_along_sweep(rng):
    for _ in range(5):
        m, z, d_inf = random_case(rng)
        from mushystefan.solver import critical_h0

        h = critical_h0(m, z, d_inf) * np.logspace(0.1, 5, 12)
        xis = [solve_p1(m, z, Convective(float(v), d_inf)).xi for v in h]
        assert np.all(np.diff(xis) > 0)


def test_mu_converges():
    lim = solve_p1_limit(UNIT, ZONE, 1.0)
    assert abs(solve_p1(UNIT, ZONE, Convective(1e8, 1.0)).mu - lim.mu) < 1e-6


def test_field_gap_decreases(table):
    assert np.all(np.diff(table.column("field_gap")) < 0)


def test_subcritical_entry_propagates():
    with pytest.raises(Subcritical):
        convergence_study(UNIT, MushyZone(2.0, 0.5), 1.0, [0.1, 10.0, 100.0])


def test_fit_ignores_noise_floor():
    x = np.array([1.0, 10.0, 100.0, 1000.0])
    y = np.array([1.0, 0.1, 0.01, 1e-12])
    slope, _ = fit_loglog(x, y)
    assert slope == pytest.approx(-1.0, abs=1e-12)
