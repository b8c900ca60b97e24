"""High-precision reference values for the materials and contour unit tests.

Evaluates the closed forms with mpmath at 50 digits, independently of the
C++ implementation. Run with `python3 closed_form_oracle.py`; the printed
values are frozen into tests/test_materials.cpp and tests/test_contours.cpp.
"""
import mpmath as mp

mp.mp.dps = 50

C = mp.mpf("2.99792458e10")
HBAR = mp.mpf("1.054571817e-27")
KB = mp.mpf("1.380649e-16")
SIGMA0 = mp.mpf("3e17")
TAU = mp.mpf("1.88e-14")
GAP = mp.mpf("1e-4")


def sigma(w, tau=TAU):
    return SIGMA0 / (1 - 1j * tau * w)


def zeta(w, tau=TAU):
    return (1 - 1j) * mp.sqrt(w / (8 * mp.pi * sigma(w, tau)))


def eps(w, tau=TAU):
    return 1 + 4j * mp.pi * sigma(w, tau) / w


def r_te_imp(p, w):
    z = zeta(w)
    return (1 + z * p) / (1 - z * p)


def r_tm_imp(p, w):
    z = zeta(w)
    return (p + z) / (p - z)


def integrand(r, p, w, a=GAP):
    return p**2 / (r**2 * mp.exp(-2j * w * p * a / C) - 1)


def show(name, z):
    z = mp.mpc(z)
    print(f"{name}: {mp.nstr(z.real, 17)} {mp.nstr(z.imag, 17)}")


show("sigma(1e13)", sigma(mp.mpf("1e13")))
show("zeta(1e13, tau=0)", zeta(mp.mpf("1e13"), 0))
show("zeta(1e13)", zeta(mp.mpf("1e13")))
show("eps(1e13, tau=0)", eps(mp.mpf("1e13"), 0))
show("eps(1e13)", eps(mp.mpf("1e13")))
show("r_te_imp(5i, 1e13)", r_te_imp(5j, mp.mpf("1e13")))
show("r_tm_imp(2i, 1e12)", r_tm_imp(2j, mp.mpf("1e12")))
w = mp.mpf("1e13")
show("integrand TE imp p=0.5 w=1e13", integrand(r_te_imp(mp.mpf("0.5"), w), mp.mpf("0.5"), w))
q = mp.mpf(1)
val = -1j * q**2 / (r_te_imp(1j * q, w) ** 2 * mp.exp(2 * w * q * GAP / C) - 1)
show("c2_real_form TE imp q=1 w=1e13", val)
x = HBAR * mp.mpf("1e13") / (KB * 300)
print("planck g(1e13, 300K):", mp.nstr(1 / mp.expm1(x), 17))
print("planck g(x=10):", mp.nstr(1 / mp.expm1(10), 17))
