"""Brute-force midpoint-Riemann values for the contour integrals.

10^6 panels, evaluated straight from the closed form of the integrand at
extended precision. The printed values are frozen into tests/test_quadrature.cpp.
"""
import numpy as np

C = 2.99792458e10
SIGMA0, TAU, GAP = 3e17, 1.88e-14, 1e-4
ld = np.longdouble
cld = np.clongdouble


def zeta(w):
    sigma = SIGMA0 / (1 - 1j * TAU * w)
    return (1 - 1j) * np.sqrt(w / (8 * np.pi * sigma))


def te_imp(p, w):
    z = cld(zeta(w))
    r = (1 + z * p) / (1 - z * p)
    return p**2 / (r**2 * np.exp(-2j * ld(w) * p * ld(GAP) / ld(C)) - 1)


def midpoint(f, lo, hi, n=10**6):
    h = (ld(hi) - ld(lo)) / n
    x = ld(lo) + (np.arange(n, dtype=ld) + ld(0.5)) * h
    return np.sum(f(x), dtype=ld) * h


w = 1e13
# C1: p from 1 to 0 -> minus the integral over p in [0, 1].
c1 = -midpoint(lambda p: te_imp(p.astype(cld), w).real, 0.0, 1.0)
decay = 2 * w * GAP / C
qmax = max(10.0, 25.0 / decay)
# C2: p = i q, dp = i dq.
c2 = midpoint(lambda q: (1j * te_imp(1j * q.astype(cld), w)).real, 0.0, qmax)
print("C1 TE impedance, omega=1e13:", repr(float(c1)))
print("C2 TE impedance, omega=1e13:", repr(float(c2)), "qmax", qmax)
