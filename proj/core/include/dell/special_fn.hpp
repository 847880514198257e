#ifndef DELL_SPECIAL_FN_HPP
#define DELL_SPECIAL_FN_HPP

#include "dell/common.hpp"

namespace dell {

enum class PsiRegime { ConvergentSeries, Asymptotic };

struct PsiEvaluation {
  cplx value;
  PsiRegime regime = PsiRegime::ConvergentSeries;
  int terms_used = 0;
  double remainder_bound = 0.0;
};

enum class HlRegime {
  BelowA0,   // xi < A0 |t|
  BelowT,    // A0 |t| < xi < |t|
  AboveT,    // |t| < xi < A1 |t|
  AboveA1,   // xi > A1 |t|
  Generic
};

struct OscillatoryIntegralResult {
  cplx cosine_part;  // int_xi^inf u^{-s} cos u du
  cplx sine_part;    // int_xi^inf u^{-s} sin u du
  HlRegime regime = HlRegime::Generic;
};

struct PsiOptions {
  double series_cutoff = 40.0;   // X0: series/asymptotic switchover scale
  int max_asymptotic_terms = 25;
  int max_series_terms = 20000;
  int force_regime = 0;          // 0 auto, 1 convergent, 2 asymptotic
};

/// Gamma(s) on the principal branch; throws near poles.
cplx complex_gamma(cplx s);

/// log Gamma(s), continuous on the cut plane (principal at Re(s) > 0,
/// extended by the reflection formula); the workhorse for gamma quotients
/// whose factors individually over/underflow.
cplx log_gamma(cplx s);

/// Convergent Kummer series 1F1(a,c;x), compensated double-double
/// accumulation. Throws regime_error for |x| beyond the cutoff.
cplx kummer_1f1(cplx a, cplx c, cplx x, const PsiOptions& opt = {});

/// Tricomi Psi(a,c;x): two-term Kummer formula in the convergent regime,
/// least-term-truncated asymptotic expansion otherwise. Terminating
/// (polynomial) cases are evaluated exactly.
PsiEvaluation tricomi_psi(cplx a, cplx c, cplx x, const PsiOptions& opt = {});

/// rho_N = Psi(a,c;x) - sum_{k<N} (-1)^k (a)_k (a-c+1)_k x^{-a-k} / k!
cplx psi_asymptotic_remainder(cplx a, cplx c, cplx x, int n_terms,
                              const PsiOptions& opt = {});

/// Upper incomplete gamma on the principal branch, via
/// z^a e^{-z} Psi(1,a+1;z) = Gamma(a,z); supports z on the imaginary axis.
cplx upper_incomplete_gamma(cplx a, cplx z, const PsiOptions& opt = {});

/// Hardy-Littlewood tails int_xi^inf u^{-s} {cos,sin} u du, computed
/// exactly from incomplete gammas at +-i xi; regime classified by xi
/// against A0|t|, |t|, A1|t|.
OscillatoryIntegralResult oscillatory_integral(double xi, cplx s,
                                               double a0 = 0.5,
                                               double a1 = 2.0,
                                               const PsiOptions& opt = {});

/// Pochhammer (a)_k.
cplx pochhammer(cplx a, int k);

}  // namespace dell

#endif  // DELL_SPECIAL_FN_HPP
