import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mushystefan import numerics
from mushystefan.errors import NoSignChange
from mushystefan.numerics import Bracket, erf, find_root_increasing

from conftest import GOLDEN


def test_erf_zero_and_odd():
    assert erf(0.0) == 0.0
    assert erf(-0.7) == -erf(0.7)


def test_erf_one_matches_taylor_oracle():
    assert abs(erf(1.0) - GOLDEN["erf_1"]) <= 1e-15


def test_erf_against_integral_definition():
    xs = np.concatenate([np.linspace(-8, 8, 1601), np.linspace(1.4, 1.6, 101), [27.5, -40.0]])
    with mpmath.workdps(40):
        ref = np.array([float(mpmath.erf(mpmath.mpf(float(x)))) for x in xs])
    assert np.max(np.abs(erf(xs) - ref)) <= 1e-15
    assert max(abs(erf(float(x)) - r) for x, r in zip(xs, ref)) <= 1e-15


def test_erf_array_matches_scalar():
    xs = np.linspace(-6, 6, 997)
    assert np.array_equal(erf(xs), np.array([erf(float(x)) for x in xs]))


def test_erf_non_finite():
    assert erf(math.inf) == 1.0
    assert erf(-math.inf) == -1.0
    assert math.isnan(erf(math.nan))


def test_erf_strictly_increasing_on_sample():
    xs = np.linspace(-6, 6, 20001)
    ys = erf(xs)
    # beyond |x| ~ 4 consecutive samples differ by less than one ulp of erf
    core = np.abs(xs) < 4.0
    assert np.all(np.diff(ys[core]) > 0)
    assert np.all(np.diff(ys) >= 0)


def test_erf_tail_bound():
    xs = np.linspace(0.1, 6, 600)
    tail = 1.0 - erf(xs)
    assert np.all(tail >= 0)
    assert np.all(tail[xs < 5.5] > 0)
    assert np.all(tail < np.exp(-xs * xs))


def test_erfc_far_tail():
    with mpmath.workdps(30):
        for x in (3.0, 5.0, 10.0, 20.0):
            assert numerics.erfc(x) == pytest.approx(float(mpmath.erfc(x)), rel=1e-14)


@given(st.floats(-30, 30, allow_nan=False))
def test_erf_bounded_and_odd(x):
    y = erf(x)
    assert -1.0 <= y <= 1.0
    assert erf(-x) == -y


def test_root_affine():
    assert find_root_increasing(lambda x: x - 1.0, Bracket(0.0, 2.0), 1e-13) == pytest.approx(1.0, abs=1e-13)


def test_root_erf_half():
    x = find_root_increasing(lambda x: erf(x) - 0.5, Bracket(0.0, 1.0), 1e-13)
    assert abs(x - GOLDEN["erfinv_half"]) <= 1e-13


def test_root_no_sign_change():
    with pytest.raises(NoSignChange):
        find_root_increasing(lambda x: x + 1.0, Bracket(0.0, 2.0), 1e-13)


def test_root_expands_bracket():
    assert find_root_increasing(lambda x: x - 300.0) == pytest.approx(300.0, abs=1e-10)


def test_root_cap():
    with pytest.raises(NoSignChange):
        find_root_increasing(lambda x: x - 5000.0)


def test_root_tolerates_overflowing_objective():
    x = find_root_increasing(lambda x: math.exp(min(x * x, 700.0)) - 10.0 if x < 26 else math.inf)
    assert x == pytest.approx(math.sqrt(math.log(10.0)), abs=1e-12)


def test_bracket_requires_order():
    with pytest.raises(ValueError):
        Bracket(1.0, 1.0)


@settings(max_examples=60)
@given(st.floats(0.01, 200.0), st.floats(0.1, 5.0))
def test_root_properties(target, power):
    f = lambda x: x ** power - target ** power
    root = find_root_increasing(f)
    tol = numerics.ROOT_TOL
    # f changes sign within the returned bracket width
    assert f(root - tol) <= 0 <= f(root + tol) or abs(root - target) <= 4 * tol * max(1.0, target)
    again = find_root_increasing(f, Bracket(max(root - 1e-3, 1e-12), root + 1e-3))
    assert abs(again - root) <= 2 * tol * max(1.0, target)
    assert find_root_increasing(f) == root


def test_bisect_independent_path():
    r = numerics.bisect(lambda x: erf(x) - 0.5, 0.0, 1.0, iterations=60)
    assert abs(r - GOLDEN["erfinv_half"]) <= 1e-15
