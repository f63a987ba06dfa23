"""Independent oracle for the frozen reference values used by the C++ tests.

Every value is computed from the closed-form shell formulas directly (sympy for
the symbolic checks, plain floats otherwise); nothing here calls the C++ code.
Run: python3 tests/oracles/closed_form_oracle.py
"""
import math

import sympy as sp


def lame_terms(lam, mu):
    c = lam / (lam + 2 * mu)
    kb = lam * mu / (lam + 2 * mu)
    return c, kb


def rolled_plate(lam, mu, h, ls, R):
    _, kb = lame_terms(lam, mu)
    grad = h * ls**2 * mu * 4 * mu**2 / (lam + 2 * mu) ** 2
    m11 = -(h**3 / 12 * (kb + mu) + grad) / R
    m22 = -(h**3 / 12 * kb + grad) / R
    return m11, m22


def extension(lam, mu, h, ls, R, eta, zeta):
    grad = h * ls**2 * mu * 4 * mu**2 / (lam + 2 * mu) ** 2
    n11 = 2 * h * mu * (lam + mu) / (lam + 2 * mu) * (eta**2 - 1) + h * lam * mu / (lam + 2 * mu) * (zeta**2 - 1)
    n22 = h * lam * mu / (lam + 2 * mu) * (eta**2 - 1) + 2 * h * mu * (lam + mu) / (lam + 2 * mu) * (zeta**2 - 1)
    m11 = (h**3 * mu / 6 * (lam + mu) / (lam + 2 * mu) + grad) * (1 - eta) / R
    m22 = (h**3 / 12 * lam * mu / (lam + 2 * mu) + grad) * (1 - eta) / R
    return n11, n22, m11, m22


def radial_body_force(lam, mu, h, ls, R, eta, zeta):
    n11, _, m11, _ = extension(lam, mu, h, ls, R, eta, zeta)
    return eta * n11 / R - m11 / R**2


def bisect_zeta(lam, mu, h, ls, R, eta):
    lo, hi = 1.0, 10.0
    f = lambda z: radial_body_force(lam, mu, h, ls, R, eta, z)
    flo = f(lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def torsion(lam, mu, h, ls, R, gam):
    _, kb = lame_terms(lam, mu)
    grad = h * ls**2 * mu * 4 * mu**2 / (lam + 2 * mu) ** 2
    n11 = h * gam**2 * kb
    n12 = h * gam * mu
    n22 = h * gam**2 * (kb + mu)
    m11 = -(gam**2) / R * (h**3 / 12 * kb + grad)
    m12 = -gam / R * h**3 / 12 * mu
    m22 = -(gam**2) / R * (h**3 / 12 * (kb + mu) + grad)
    g = -(m11 + 2 * gam * m12 + gam**2 * m22) / R**2 + (n11 + 2 * gam * n12 + gam**2 * n22) / R
    return dict(n11=n11, n12=n12, n22=n22, m11=m11, m12=m12, m22=m22, g=g)


def koiter(lam, mu, h, tre, e2, trr, r2):
    _, kb = lame_terms(lam, mu)
    return h * (kb * tre**2 + mu * e2) + h**3 / 24 * (kb * trr**2 + mu * r2)


def torsion_edge_traction_symbolic():
    """Shows that the z = 0 traction of the twisted cylinder picks up the
    tangential derivative of M^{21} e_r(vartheta) along the edge."""
    th1, R, gam, M21 = sp.symbols("theta1 R gamma M21", positive=True)
    vth = th1 / R  # z = 0
    er = sp.Matrix([sp.cos(vth), sp.sin(vth), 0])
    # nu = -e_2, tau = e_1 in parameter space, arclength s = theta1
    q = -M21 * er
    return sp.simplify(-sp.diff(q, th1))  # -(M nu tau)'


if __name__ == "__main__":
    lam = mu = 1.0
    h, ls, R = 0.1, 0.05, 1.0
    m11, m22 = rolled_plate(lam, mu, h, ls, R)
    print(f"rolled plate M11 = {m11:.17g}  M22 = {m22:.17g}  g_r = {-m11 / R**2:.17g}")
    print(f"koiter rolled plate = {koiter(lam, mu, h, 0, 0, -1, 1):.17g}")
    w4d = h * ls**2 * mu * 2 * mu**2 / (lam + 2 * mu) ** 2 * (0 + 1)
    print(f"w4 dilatational rolled plate = {w4d:.17g}")
    print(f"koiter membrane diag(e,e) coefficient = {h * (4 * lam * mu / (lam + 2 * mu) + 2 * mu):.17g} * e^2")
    z = bisect_zeta(lam, mu, h, ls, R, 0.9)
    print(f"zeta(0.9) = {z:.17g}   residual = {radial_body_force(lam, mu, h, ls, R, 0.9, z):.3e}")
    for eta in [0.5, 0.6, 0.7, 0.8, 0.9, 0.95]:
        print(f"  zeta({eta}) = {bisect_zeta(lam, mu, h, ls, R, eta):.15g}")
    n11, n22, em11, em22 = extension(lam, mu, h, ls, R, 0.9, 1.1)
    print(f"extension eta=0.9 zeta=1.1: N11={n11:.17g} N22={n22:.17g} M11={em11:.17g} M22={em22:.17g}")
    t = torsion(lam, mu, h, ls, R, 0.2)
    print("torsion gamma=0.2:", {k: f"{v:.17g}" for k, v in t.items()})
    print("torsion z=0 traction correction:", torsion_edge_traction_symbolic().T)
    # sphere patch / cylinder areas
    print(f"cylinder R=1 L=2 area = {2 * math.pi * 1 * 2:.17g}")
    print(f"cylinder volume factor zeta=0.05 = {1 - 2 * (-0.5) * 0.05:.17g}")
    print(f"sphere volume factor H=-1 K=1 zeta=0.05 = {1 - 2 * (-1) * 0.05 + 0.05**2:.17g}")
