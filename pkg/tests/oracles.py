"""Independent reference computations for golden values.

Nothing here imports the package. Roots are located by a dense sign scan
(scipy's erf, vectorised) and refined by bisection in mpmath at 50 digits,
using the equations in their untransformed ratio form.

Run ``python tests/oracles.py`` to print the frozen values used by the tests.
"""
import mpmath
import numpy as np
from scipy.special import erf as sp_erf

mpmath.mp.dps = 50
SQRT_PI = np.sqrt(np.pi)


def dense_scan_root(f_np, f_mp, lo=0.0, hi=5.0, n=10**6, bisections=80):
    """First sign change of ``f_np`` on (lo, hi], then bisection with ``f_mp``."""
    x = np.linspace(lo, hi, n + 1)[1:]
    with np.errstate(all="ignore"):
        v = f_np(x)
    idx = np.nonzero(np.sign(v[:-1]) != np.sign(v[1:]))[0]
    if len(idx) == 0:
        raise ValueError("no sign change in scan")
    a, b = mpmath.mpf(x[idx[0]]), mpmath.mpf(x[idx[0] + 1])
    fa = f_mp(a)
    for _ in range(bisections):
        mid = (a + b) / 2
        fm = f_mp(mid)
        if mpmath.sign(fm) == mpmath.sign(fa):
            a, fa = mid, fm
        else:
            b = mid
    return float((a + b) / 2), len(idx)


def p1_equation(k, rho, c, ell, gamma, eps, d_inf, h0):
    alpha = k / (rho * c)

    def F(x, erf, exp, sqrt, pi):
        return exp(-x * x) / (k / (h0 * sqrt(pi * alpha)) + erf(x))

    def G(x, erf, exp, sqrt, pi):
        return x + gamma * (1 - eps) * sqrt(pi) / (2 * d_inf) / F(x, erf, exp, sqrt, pi)

    def f_np(x):
        return d_inf * c / (ell * SQRT_PI) * F(x, sp_erf, np.exp, np.sqrt, np.pi) - G(x, sp_erf, np.exp, np.sqrt, np.pi)

    def f_mp(x):
        args = (mpmath.erf, mpmath.exp, mpmath.sqrt, mpmath.pi)
        return d_inf * c / (ell * mpmath.sqrt(mpmath.pi)) * F(x, *args) - G(x, *args)

    return f_np, f_mp


def p2_equation(k, rho, c, ell, gamma, eps, d0):
    def G2(x, erf, exp, sqrt, pi):
        F_inf = exp(-x * x) / erf(x)
        G0 = x + gamma * (1 - eps) * sqrt(pi) / (2 * d0) / F_inf
        return G0 / F_inf

    def f_np(x):
        return G2(x, sp_erf, np.exp, np.sqrt, np.pi) - d0 * c / (ell * SQRT_PI)

    def f_mp(x):
        return G2(x, mpmath.erf, mpmath.exp, mpmath.sqrt, mpmath.pi) - d0 * c / (ell * mpmath.sqrt(mpmath.pi))

    return f_np, f_mp


def p3_equation(k, rho, c, ell, gamma, eps, q0):
    alpha = k / (rho * c)

    def G3(x, exp, sqrt):
        return (x + gamma * (1 - eps) * k / (2 * q0 * sqrt(alpha)) * exp(x * x)) * exp(x * x)

    def f_np(x):
        return G3(x, np.exp, np.sqrt) - q0 / (rho * ell * np.sqrt(alpha))

    def f_mp(x):
        return G3(x, mpmath.exp, mpmath.sqrt) - q0 / (rho * ell * mpmath.sqrt(alpha))

    return f_np, f_mp


def neumann_equation(ste):
    def f_np(x):
        return SQRT_PI * x * np.exp(x * x) * sp_erf(x) - ste

    def f_mp(x):
        return mpmath.sqrt(mpmath.pi) * x * mpmath.exp(x * x) * mpmath.erf(x) - ste

    return f_np, f_mp


def erf_taylor(x, terms=60):
    """sum (-1)^n x^(2n+1) / (n! (2n+1)) * 2/sqrt(pi), in exact rationals then 50 digits."""
    x = mpmath.mpf(x)
    total = mpmath.mpf(0)
    for n in range(terms):
        total += (-1) ** n * x ** (2 * n + 1) / (mpmath.factorial(n) * (2 * n + 1))
    return float(2 / mpmath.sqrt(mpmath.pi) * total)


def erf_inverse_half():
    lo, hi = mpmath.mpf(0), mpmath.mpf(1)
    for _ in range(60):
        mid = (lo + hi) / 2
        if mpmath.erf(mid) - mpmath.mpf(0.5) < 0:
            lo = mid
        else:
            hi = mid
    return float((lo + hi) / 2)


def golden_values():
    out = {}
    out["erf_1"] = erf_taylor(1.0)
    out["erfinv_half"] = erf_inverse_half()
    out["p1_xi"], out["p1_crossings"] = dense_scan_root(*p1_equation(1, 1, 1, 1, 0.1, 0.5, 1.0, 10.0))
    out["p2_xi"], out["p2_crossings"] = dense_scan_root(*p2_equation(1, 1, 1, 1, 0.1, 0.5, 1.0))
    out["p3_xi"], out["p3_crossings"] = dense_scan_root(*p3_equation(1, 1, 1, 1, 0.1, 0.5, 2.0))
    out["p3_xi_q4"], _ = dense_scan_root(*p3_equation(1, 1, 1, 1, 0.1, 0.5, 4.0))
    for ste in (0.1, 1.0, 10.0):
        out[f"neumann_{ste}"], _ = dense_scan_root(*neumann_equation(ste))
    out["neumann_1e-6"], _ = dense_scan_root(*neumann_equation(1e-6), lo=0.0, hi=0.01)
    return out


if __name__ == "__main__":
    for key, value in golden_values().items():
        print(f"{key} = {value!r}")
