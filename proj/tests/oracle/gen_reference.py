#!/usr/bin/env python3
"""Generate the frozen reference values used by the C++ test suites.

All values are computed with mpmath at 60+ significant digits, independently
of the C++ implementation:
  * Mittag-Leffler values come from the defining power series summed in exact
    arbitrary-precision arithmetic (precision scaled with the cancellation
    depth exp(|z|^(1/a))).
  * Spectral-function cross-checks use mpmath.invertlaplace on the Laplace
    image s^(a-b)/(s^a + A).
  * Complex compressibility / wavenumber values are direct closed-form
    evaluations in mpmath complex arithmetic.

Run from the repository root:  python3 tests/oracle/gen_reference.py
The output is pasted (manually) into tests/reference_values.hpp.
"""
import math

from mpmath import mp, mpf, mpc, gamma, sqrt, sin, cos, pi, exp, power, invertlaplace

PREC = 60


def ml_series(a, b, z):
    """E_{a,b}(z) by exact-arithmetic series with adaptive precision."""
    depth = abs(z) ** (1.0 / a)
    need = 80 + int(depth / math.log(10))
    if need > 3000:
        raise ValueError("series oracle infeasible this deep")
    mp.dps = need
    a_, b_, z_ = mpf(repr(a)), mpf(repr(b)), mpf(repr(z))
    s = mpf(0)
    zz = mpf(1)
    n = 0
    while True:
        t = zz / gamma(a_ * n + b_)
        s += t
        zz *= z_
        n += 1
        if n > 30 and abs(t) < mpf(10) ** (-(mp.dps - 15)) and abs(zz / gamma(a_ * n + b_)) < abs(t):
            break
        if n > 2 * 10**5:
            raise RuntimeError("no convergence")
    mp.dps = PREC
    return +s


def _num(x):
    return mpf(repr(x)) if isinstance(x, (int, float)) else x


def f_ab(a, b, A, Om):
    a, b, A, Om = _num(a), _num(b), _num(A), _num(Om)
    num = A * sin((b - a) * pi) + Om**a * sin(b * pi)
    den = Om ** (2 * a) + 2 * A * Om**a * cos(a * pi) + A * A
    return Om ** (a - b) / pi * num / den


def ml_spectral_mp(a, b, z):
    """E_{a,b}(z), z<0, via tanh-sinh quadrature of the spectral representation
    t^{b-1} E_{a,b}(-t^a) = int_0^inf exp(-Om t) f_{a,b}(Om,1) dOm  (0<a<=1, b<1+a).
    Independent of the series (used where the series is numerically infeasible)."""
    from mpmath import quad as mpquad, inf as mpinf
    mp.dps = PREC + 20
    s = (-mpf(repr(z))) ** (1 / mpf(repr(a)))
    g = lambda Om: exp(-Om * s) * f_ab(a, b, 1.0, Om)
    I = mpquad(g, [0, mpf(1) / s, 1, 10 / s, mpinf])
    out = s ** (1 - mpf(repr(b))) * I
    mp.dps = PREC
    return +out


def ml_best_oracle(a, b, z):
    depth = abs(z) ** (1.0 / a)
    if z <= 0 and depth / math.log(10) > 2500:
        return ml_spectral_mp(a, b, z)
    return ml_series(a, b, z)


def show(tag, v, digits=21):
    mp.dps = PREC
    print(f"{tag:44s} = {mp.nstr(v, digits)}")


def show_c(tag, v, digits=21):
    mp.dps = PREC
    print(f"{tag:44s} = {mp.nstr(v.real, digits)} {'+' if v.imag >= 0 else '-'} {mp.nstr(abs(v.imag), digits)} i")


def main():
    mp.dps = PREC

    # --- Mittag-Leffler battery (series oracle) ---
    battery = [
        (0.5, 1.0, -1.0), (0.5, 1.0, -0.5), (0.5, 1.0, -3.0), (0.5, 1.0, -5.0),
        (0.5, 1.0, -20.0), (0.25, 1.0, -2.0), (0.25, 1.0, -3.0), (0.25, 1.0, -100.0),
        (0.9, 0.95, -12.0), (0.9, 0.95, -50.0), (0.3, 0.6, -5.0), (0.7, 1.0, -8.0),
        (0.7, 1.0, -100.0), (0.1, 1.0, -1.2), (0.99, 1.0, -20.0), (0.5, 0.5, -6.0),
        (0.6, 1.3, -9.0), (0.75, 1.0, -2.5), (0.4, 0.7, -30.0), (0.5, 1.0, 2.0),
        (1.5, 1.0, -8.0), (2.0, 0.7, -9.0),
    ]
    print("// Mittag-Leffler E_{a,b}(z), exact-arithmetic series")
    for a, b, z in battery:
        show(f"E[{a},{b}]({z})", ml_best_oracle(a, b, z))

    # --- spectral function values ---
    print("\n// spectral function f_{a,b}(Omega, A)")
    show("f[0.5,1](Om=1, A=1)", f_ab(0.5, 1.0, 1.0, 1.0))
    show("f[0.3,0.6](Om=5, A=2)", f_ab(0.3, 0.6, 2.0, 5.0))
    show("f[0.25,0.8](Om=0.3, A=4)", f_ab(0.25, 0.8, 4.0, 0.3))

    # invertlaplace cross-check: f(Om) is the inverse Laplace transform of
    # g(t) = t^{b-1} E_{a,b}(-A t^a), so feed g continued to complex s.
    a, b, A, Om = 0.3, 0.6, 2.0, 5.0
    mp.dps = 40

    def ml_series_cplx(a_, b_, z):
        caller_dps = mp.dps
        depth = abs(z) ** (1.0 / a_)
        mp.dps = caller_dps + 30 + int(depth / math.log(10))
        s = mpc(0)
        zz = mpc(1)
        n = 0
        while True:
            t = zz / gamma(_num(a_) * n + _num(b_))
            s += t
            zz *= z
            n += 1
            if n > 30 and abs(t) < mpf(10) ** (-(mp.dps - 8)):
                break
        mp.dps = caller_dps
        return +s

    img = lambda s: s ** (_num(b) - 1) * ml_series_cplx(a, b, -_num(A) * s ** _num(a))
    inv = invertlaplace(img, Om, method="talbot", degree=40)
    mp.dps = PREC
    print(f"// invertlaplace check at (0.3,0.6,A=2,Om=5): {mp.nstr(inv, 18)}  (closed form above)")

    # --- fractional Zener compressibility, (i w)^a = w^a exp(i a pi/2) ---
    def kappa_zener(k0, ts, te, al, be, w):
        iw = mpc(0, 1) * mpf(repr(w))
        return mpf(repr(k0)) * (1 + (mpf(repr(te)) * iw) ** mpf(repr(be))) / (1 + (mpf(repr(ts)) * iw) ** mpf(repr(al)))

    print("\n// kappa_zener(k0=1, ts=1, te=1e-3, a=b=0.5, w=1)")
    show_c("kappa_Z", kappa_zener(1.0, 1.0, 1e-3, 0.5, 0.5, 1.0))

    print("\n// modified five-parameter kappa (k0=1, ts=1, te=0.1, a=0.4, b=0.8, w=10)")
    k0, ts, te, al, be, w = 1.0, 1.0, 0.1, 0.4, 0.8, 10.0
    iw = mpc(0, 1) * mpf(repr(w))
    km = mpf(1) * (1 + (mpf(repr(te)) * iw) ** mpf(repr(be))) / (
        1 + (mpf(repr(ts)) * iw) ** mpf(repr(al)) + (mpf(repr(ts)) * iw) ** mpf(repr(be)))
    show_c("kappa_mod", km)

    print("\n// kappa'_nuML(Omega=1; k0=1, ts=1, te=0.1, a=0.4, b=0.8)")
    Om = mpf(1)
    tsm, tem, alm, bem = mpf(1), mpf("0.1"), mpf("0.4"), mpf("0.8")
    D = (tsm * Om) ** (2 * alm) + 2 * (tsm * Om) ** alm * cos(alm * pi) + 1
    br = ((tsm * Om) ** alm * sin(alm * pi)
          - (tem * Om) ** bem * sin(bem * pi)
          - (tsm * Om) ** alm * (tem * Om) ** bem * sin((bem - alm) * pi))
    show("kappa_prime", 1 / (pi * Om * D) * br)

    print("\n// kappa_nuML(Omega=2; k0=1, ts=1, te=1e-3, a=b=0.5)")
    Om = mpf(2)
    tsm, tem, alm = mpf(1), mpf("0.001"), mpf("0.5")
    D = (tsm * Om) ** (2 * alm) + 2 * (tsm * Om) ** alm * cos(alm * pi) + 1
    show("kappa_nuML", (tsm**alm - tem**alm) * Om ** (alm - 1) * sin(alm * pi) / pi / D)

    print("\n// principal sqrt wavenumber: kappa = 1 - 1i, rho0 = 1, w = 1")
    show_c("k = sqrt(1-1i)", sqrt(mpc(1, -1)))

    print("\n// relaxation response k0(1-(te/ts)^a) E_{a,1}(-(t/ts)^a), k0=1, ts=1, te=1e-3, a=0.5, t=1")
    e = ml_series(0.5, 1.0, -1.0)
    show("response(t=1)", (1 - mpf("0.001") ** mpf("0.5")) * e)

    print("\n// E_{1,1}(x)=exp(x) spot x=-30 (for closed-form path check)")
    show("exp(-30)", exp(mpf(-30)))


if __name__ == "__main__":
    main()
