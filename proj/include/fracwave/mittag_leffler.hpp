#pragma once

#include <span>
#include <string>

namespace fracwave {

// Orders of the two-parameter Mittag-Leffler function E_{a,b}.
struct MLParams {
  double a;
  double b;
};

// Parameters of the nonnegative spectral weight f_{a,b}(Omega, A) appearing in
//   t^{b-1} E_{a,b}(-A t^a) = \int_0^inf exp(-Omega t) f_{a,b}(Omega, A) dOmega,
// valid for 0 < a <= b <= 1 (the b = 1 boundary is used throughout and is the
// classical completely-monotone case).
struct SpectralFunctionParams {
  double a;
  double b;
  double A;  // rate, s^-a
};

enum class MLMethod { Closed, Taylor, SpectralIntegral, Asymptotic };

const char* to_string(MLMethod m);

// Evaluation diagnostics: which strategy fired, how many series terms were
// summed, and the a-priori error bound the strategy certifies.
struct MLEvalInfo {
  MLMethod method = MLMethod::Closed;
  int terms = 0;
  double error_bound = 0.0;
};

// E_{a,b}(t) on the real axis.
//
// Strategy (crossovers chosen from the a-priori rounding/truncation bounds,
// reported in MLEvalInfo):
//   |t| <= 11.5^a        compensated Taylor series
//   t <= -34^a           asymptotic series -sum t^-n / Gamma(b - a n), optimal
//                        truncation, Gamma poles skipped via reflection
//   in between (t < 0)   spectral integral, needs 0 < a < 1 and b < 1 + a
//   (a,b) in {(1,1),(1,2),(2,1),(2,2)}  closed elementary forms, any t
// Positive t is accepted while exp(t^(1/a)) is representable.
// Certified absolute error ~1e-10 on the accepted domain; arguments where no
// strategy certifies that (notably a > 2) are rejected.
double ml_eval(const MLParams& p, double t);
double ml_eval(const MLParams& p, double t, MLEvalInfo& info);

// Closed-form spectral weight f_{a,b}(Omega, A); nonnegative on its domain.
double spectral_function(const SpectralFunctionParams& p, double Omega);

// | t^{b-1} E_{a,b}(-A t^a) - quadrature of the Laplace representation |.
double verify_laplace_representation(const SpectralFunctionParams& p, double t);

struct FourierPairResult {
  double max_rel_error = 0.0;
  double worst_omega = 0.0;
  // largest tail-truncation bound, relative to the closed form, over the grid
  double tail_bound = 0.0;
};

// Numerically Fourier-transforms H(t) t^{b-1} E_{a,b}(-A t^a) (adaptive
// oscillatory quadrature to t = T, analytic asymptotic tail beyond; no
// windowing) and compares against (i w)^{a-b} / (A + (i w)^a).
FourierPairResult verify_fourier_pair(const MLParams& p, double A,
                                      std::span<const double> omega_grid);

}  // namespace fracwave
