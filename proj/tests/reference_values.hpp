#pragma once

// Frozen high-precision reference values, generated by
// tests/oracle/gen_reference.py (mpmath, 60 significant digits; series
// summed in exact arithmetic, deep arguments via tanh-sinh quadrature of the
// spectral representation, spectral-function point checked independently with
// mpmath.invertlaplace).  Do not edit by hand; regenerate with the script.

#include <complex>

namespace refvals {

struct MLRef {
  double a, b, z, value;
};

inline constexpr MLRef kMittagLeffler[] = {
    {0.5, 1.0, -1.0, 0.427583576155807004411},
    {0.5, 1.0, -0.5, 0.615690344192925874871},
    {0.5, 1.0, -3.0, 0.179001151181389950419},
    {0.5, 1.0, -5.0, 0.11070463773306862637},
    {0.5, 1.0, -20.0, 0.0281743487410513193186},
    {0.25, 1.0, -2.0, 0.298101793693657603668},
    {0.25, 1.0, -3.0, 0.219004427560406799254},
    {0.25, 1.0, -100.0, 0.00810434622816948733905},
    {0.9, 0.95, -12.0, 0.00551556188630438101671},
    {0.9, 0.95, -50.0, 0.00108496511710183672497},
    {0.3, 0.6, -5.0, 0.0653995303522071284193},
    {0.7, 1.0, -8.0, 0.0460699923853623798859},
    {0.7, 1.0, -100.0, 0.00336968741630599375569},
    {0.1, 1.0, -1.2, 0.440080768910618921142},
    {0.99, 1.0, -20.0, 0.000561623483674952449037},
    {0.5, 0.5, -6.0, 0.00753017674452616061116},
    {0.6, 1.3, -9.0, 0.0839056225184752203398},
    {0.75, 1.0, -2.5, 0.156426958611947442894},
    {0.4, 0.7, -30.0, 0.0112360811468724188686},
    {0.5, 1.0, 2.0, 108.940904389977972412},
    {1.5, 1.0, -8.0, -0.202871539238728162295},
    {2.0, 0.7, -9.0, -1.29334216802543730302},
};

// f_{a,b}(Omega, A)
inline constexpr double kSpectral_05_1_A1_Om1 = 0.159154943091895335769;   // = 1/(2 pi)
inline constexpr double kSpectral_03_06_A2_Om5 = 0.0594548465514751136473;
inline constexpr double kSpectral_025_08_A4_Om03 = 0.130553946053861725582;

// kappa_Z(w=1) for kappa0=1, tau_sigma=1, tau_eps=1e-3, alpha=beta=0.5
inline const std::complex<double> kKappaZener{0.51581138830084189666,
                                              -0.200557489712391524097};

// modified five-parameter kappa (kappa0=1, ts=1, te=0.1, a=0.4, b=0.8, w=10)
inline const std::complex<double> kKappaModified{0.168871164264401980809,
                                                 -0.0625518880241868395991};

// kappa'_nuML(Omega=1; kappa0=1, ts=1, te=0.1, a=0.4, b=0.8)
inline constexpr double kKappaPrimeAt1 = 0.0859798227485962511565;

// kappa_nuML(Omega=2; kappa0=1, ts=1, te=1e-3, a=b=0.5)
inline constexpr double kKappaNuMLAt2 = 0.0726538178683682489347;

// principal sqrt(1 - 1i)
inline const std::complex<double> kSqrtOneMinusI{1.09868411346780996604,
                                                 -0.455089860562227341304};

// kappa0 (1-(te/ts)^a) E_{a,1}(-(t/ts)^a) at kappa0=1, ts=1, te=1e-3, a=0.5, t=1
inline constexpr double kRelaxationResponseT1 = 0.414062196248482870348;

}  // namespace refvals
