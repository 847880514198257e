#include "dell/special_fn.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dell {

namespace {

constexpr double kLanczosG = 4.7421875;  // 607/128
constexpr double kLanczosCoeff[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5};

constexpr double kHalfLog2Pi = 0.91893853320467274178;

// log Gamma for Re(z) >= 0.5 (Godfrey's Lanczos fit, ~15 digits)
cplx log_gamma_positive(cplx z) {
  z -= 1.0;
  cplx x = kLanczosCoeff[0];
  for (int k = 1; k < 15; ++k) x += kLanczosCoeff[k] / (z + static_cast<double>(k));
  cplx t = z + kLanczosG + 0.5;
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

// log sin(pi z) without overflow for large |Im z|; correct mod 2 pi i,
// which is all the exponentiated quotients need.
cplx log_sin_pi(cplx z) {
  const cplx ipi(0.0, std::numbers::pi);
  const cplx log2i = std::log(cplx(0.0, 2.0));
  if (z.imag() > 0) {
    cplx e = std::exp(2.0 * ipi * z);  // |e| < 1
    return -ipi * z + std::log(e - 1.0) - log2i;
  }
  cplx e = std::exp(-2.0 * ipi * z);  // |e| <= 1
  return ipi * z + std::log(1.0 - e) - log2i;
}

bool near_nonpositive_integer(cplx z, double tol) {
  double r = std::round(z.real());
  return r <= 0.5 && std::abs(z.real() - r) < tol && std::abs(z.imag()) < tol;
}

struct SeriesResult {
  cplx sum;
  double magnitude_sum = 0.0;  // sum of |term|, for conditioning
  int terms = 0;
};

// 1F1(a,c;x) by its defining series in double-double arithmetic.
SeriesResult kummer_series(cplx a, cplx c, cplx x, const PsiOptions& opt) {
  SeriesResult res;
  cdd term{cplx(1.0, 0.0)};
  cdd sum = term;
  double magsum = 1.0;
  for (int k = 0; k < opt.max_series_terms; ++k) {
    // each factor enters exactly (two_sum offsets are error-free), so the
    // term recurrence keeps full double-double accuracy
    cdd ak{two_sum(a.real(), static_cast<double>(k)), dd(a.imag())};
    cdd ck{two_sum(c.real(), static_cast<double>(k)), dd(c.imag())};
    term = cdd_mul(term, ak);
    term = cdd_mul(term, cdd(x));
    term = cdd_div(term, ck);
    term = cdd_div(term, cdd(cplx(static_cast<double>(k + 1), 0.0)));
    sum = cdd_add(sum, term);
    double tmag = term.abs_estimate();
    magsum += tmag;
    if (tmag == 0.0) {  // a at a nonpositive integer: the series terminates
      res.terms = k + 1;
      break;
    }
    double next_ratio = std::abs(a + static_cast<double>(k + 1)) * std::abs(x) /
                        (std::abs(c + static_cast<double>(k + 1)) *
                         static_cast<double>(k + 2));
    if (next_ratio < 0.9 &&
        tmag * next_ratio / (1.0 - next_ratio) <
            1e-15 * std::max(sum.abs_estimate(), 1e-300)) {
      res.terms = k + 1;
      break;
    }
  }
  if (res.terms == 0)
    throw regime_error("kummer series did not converge within term budget");
  res.sum = sum.to_cplx();
  res.magnitude_sum = magsum;
  return res;
}

// Asymptotic term scan: cumulative products of the term ratios. Returns the
// best truncation index (the least term, or earlier once the cumulative
// relative size is already at rounding level) and its relative magnitude.
void asymptotic_scan(cplx a, cplx b, cplx x, int max_terms, int* trunc_index,
                     double* trunc_rel) {
  double ax = std::abs(x);
  int budget = std::max(500, max_terms);
  double cum = 1.0;
  double best = 1.0;
  int best_k = 0;
  for (int k = 0; k < budget; ++k) {
    double r = std::abs(a + static_cast<double>(k)) *
               std::abs(b + static_cast<double>(k)) /
               (static_cast<double>(k + 1) * ax);
    cum *= r;
    if (cum < best) {
      best = cum;
      best_k = k + 1;
    }
    if (cum < 1e-16) break;  // further terms are below rounding level
    if (cum > 1e6) break;    // diverging, no point scanning further
  }
  *trunc_index = best_k;
  *trunc_rel = best;
}

}  // namespace

cplx pochhammer(cplx a, int k) {
  cplx p = 1.0;
  for (int j = 0; j < k; ++j) p *= a + static_cast<double>(j);
  return p;
}

cplx log_gamma(cplx s) {
  if (s.real() >= 0.5) return log_gamma_positive(s);
  // reflection: log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1-z)
  return std::log(cplx(std::numbers::pi)) - log_sin_pi(s) -
         log_gamma_positive(1.0 - s);
}

cplx complex_gamma(cplx s) {
  double r = std::round(s.real());
  if (r <= 0.5 && std::abs(s.real() - r) < 1e-9 && std::abs(s.imag()) < 1e-9) {
    std::ostringstream os;
    os << "complex_gamma: argument within 1e-9 of the pole at " << r;
    throw std::domain_error(os.str());
  }
  return std::exp(log_gamma(s));
}

cplx kummer_1f1(cplx a, cplx c, cplx x, const PsiOptions& opt) {
  if (near_nonpositive_integer(c, 1e-9))
    throw std::domain_error("kummer_1f1: c at or near a nonpositive integer");
  if (std::abs(x) > opt.series_cutoff)
    throw regime_error(
        "kummer_1f1: |x| beyond the convergent-regime cutoff; use the "
        "asymptotic path");
  return kummer_series(a, c, x, opt).sum;
}

PsiEvaluation tricomi_psi(cplx a, cplx c, cplx x, const PsiOptions& opt) {
  if (x == cplx{0.0, 0.0})
    throw std::domain_error("tricomi_psi: x must be nonzero");
  cplx b = a - c + 1.0;
  cplx logx = std::log(x);

  // terminating case: (b)_k vanishes, the expansion is an exact polynomial
  double br = std::round(b.real());
  if (br <= 0.5 && std::abs(b.real() - br) < 1e-9 && std::abs(b.imag()) < 1e-9) {
    int j = static_cast<int>(-br);
    PsiEvaluation ev;
    ev.regime = PsiRegime::Asymptotic;
    cplx term = std::exp(-a * logx);
    KahanSumC acc;
    acc.add(term);
    for (int k = 0; k < j; ++k) {
      term *= -(a + static_cast<double>(k)) * (b + static_cast<double>(k)) /
              (static_cast<double>(k + 1) * x);
      acc.add(term);
    }
    ev.value = acc.value();
    ev.terms_used = j + 1;
    ev.remainder_bound = 0.0;
    return ev;
  }

  int least_k = 0;
  double least_rel = 1.0;
  asymptotic_scan(a, b, x, opt.max_asymptotic_terms, &least_k, &least_rel);

  auto eval_asymptotic = [&]() {
    PsiEvaluation ev;
    ev.regime = PsiRegime::Asymptotic;
    cplx term = std::exp(-a * logx);
    double scale = std::abs(term);
    KahanSumC acc;
    acc.add(term);
    for (int k = 0; k + 1 < least_k; ++k) {
      term *= -(a + static_cast<double>(k)) * (b + static_cast<double>(k)) /
              (static_cast<double>(k + 1) * x);
      acc.add(term);
    }
    cplx omitted = term * (a + static_cast<double>(least_k - 1)) *
                   (b + static_cast<double>(least_k - 1)) /
                   (static_cast<double>(least_k) * x);
    ev.value = acc.value();
    ev.terms_used = least_k;
    ev.remainder_bound = 2.0 * std::abs(omitted) + 1e-16 * scale;
    return ev;
  };

  auto eval_convergent = [&]() {
    // two-term Kummer formula, gamma quotients combined in log space so
    // over/underflowing factors cancel
    if (std::abs(c.imag()) < 1e-6 &&
        std::abs(c.real() - std::round(c.real())) < 1e-6)
      throw std::domain_error(
          "tricomi_psi: c within 1e-6 of an integer; the two-term formula "
          "degenerates");
    PsiEvaluation ev;
    ev.regime = PsiRegime::ConvergentSeries;
    SeriesResult f1 = kummer_series(a, c, x, opt);
    // second solution through the Kummer transform 1F1(b,2-c;x) =
    // e^x 1F1(1-a,2-c;-x): the small first parameter keeps the series
    // cancellation-free even when |Im c| is comparable to |x|
    SeriesResult f2 = kummer_series(1.0 - a, 2.0 - c, -x, opt);
    ev.terms_used = f1.terms + f2.terms;
    cplx coef1 = std::exp(log_gamma(1.0 - c) - log_gamma(b));
    cplx term1 = coef1 * f1.sum;
    cplx term2{0.0, 0.0};
    double mag2 = 0.0;
    if (!near_nonpositive_integer(a, 1e-9)) {
      cplx log_coef2 =
          log_gamma(c - 1.0) - log_gamma(a) + (1.0 - c) * logx + x;
      if (log_coef2.real() > -700.0) {
        cplx coef2 = std::exp(log_coef2);
        term2 = coef2 * f2.sum;
        mag2 = std::abs(coef2) * f2.magnitude_sum;
      }
    }
    ev.value = term1 + term2;
    double cond = std::abs(coef1) * f1.magnitude_sum + mag2;
    // cond*1e-30: double-double series accumulation; the second term: the
    // term1/term2 cancellation happens in plain binary64
    ev.remainder_bound =
        cond * 1e-30 + 1e-15 * (std::abs(term1) + std::abs(term2));
    return ev;
  };

  if (opt.force_regime == 1) return eval_convergent();
  if (opt.force_regime == 2) return eval_asymptotic();

  // fast path: deep in the asymptotic region
  if (std::abs(x) > opt.series_cutoff && least_rel <= 1e-12)
    return eval_asymptotic();

  double asym_bound =
      2.0 * least_rel * std::abs(std::exp(-a * logx));  // if we truncated now
  try {
    PsiEvaluation ev = eval_convergent();
    // near the switchover neither expansion dominates a priori; take the
    // one whose error estimate is smaller
    if (least_rel <= 1e-6 && asym_bound < ev.remainder_bound)
      return eval_asymptotic();
    return ev;
  } catch (const std::domain_error&) {
    // degenerate two-term formula: the asymptotic expansion is the only
    // path left; accept it if it reaches working precision at all
    if (least_rel <= 1e-8) return eval_asymptotic();
    throw;
  }
}

cplx psi_asymptotic_remainder(cplx a, cplx c, cplx x, int n_terms,
                              const PsiOptions& opt) {
  if (n_terms < 1)
    throw std::domain_error("psi_asymptotic_remainder: N must be positive");
  PsiEvaluation psi = tricomi_psi(a, c, x, opt);
  cplx b = a - c + 1.0;
  cplx term = std::exp(-a * std::log(x));
  KahanSumC acc;
  acc.add(term);
  for (int k = 0; k + 1 < n_terms; ++k) {
    term *= -(a + static_cast<double>(k)) * (b + static_cast<double>(k)) /
            (static_cast<double>(k + 1) * x);
    acc.add(term);
  }
  return psi.value - acc.value();
}

cplx upper_incomplete_gamma(cplx a, cplx z, const PsiOptions& opt) {
  if (z == cplx{0.0, 0.0})
    throw std::domain_error("upper_incomplete_gamma: z must be nonzero");
  PsiEvaluation psi = tricomi_psi(cplx(1.0, 0.0), a + 1.0, z, opt);
  return std::exp(a * std::log(z) - z) * psi.value;
}

OscillatoryIntegralResult oscillatory_integral(double xi, cplx s, double a0,
                                               double a1,
                                               const PsiOptions& opt) {
  if (xi <= 0.0)
    throw std::domain_error("oscillatory_integral: xi must be positive");
  if (!(a0 > 0.0 && a0 < 1.0 && a1 > 1.0))
    throw std::domain_error("oscillatory_integral: need 0 < A0 < 1 < A1");

  cplx one_minus_s = 1.0 - s;
  double logxi = std::log(xi);
  // e^{-i pi (1-s)/2} Gamma(1-s, i xi)  ==  C - i S ; the polar phases of
  // (i xi)^{1-s} cancel the rotation exactly, so fold everything into one
  // exponent and multiply by Psi(1, 2-s, +-i xi).
  PsiEvaluation psi_plus = tricomi_psi(cplx(1.0, 0.0), 2.0 - s,
                                       cplx(0.0, xi), opt);
  PsiEvaluation psi_minus = tricomi_psi(cplx(1.0, 0.0), 2.0 - s,
                                        cplx(0.0, -xi), opt);
  cplx e1 = std::exp(one_minus_s * logxi - cplx(0.0, xi)) * psi_plus.value;
  cplx e2 = std::exp(one_minus_s * logxi + cplx(0.0, xi)) * psi_minus.value;

  OscillatoryIntegralResult res;
  res.cosine_part = (e1 + e2) / 2.0;
  res.sine_part = (e2 - e1) / cplx(0.0, 2.0);

  double at = std::abs(s.imag());
  if (at < 1e-12)
    res.regime = HlRegime::Generic;
  else if (xi < a0 * at)
    res.regime = HlRegime::BelowA0;
  else if (xi < at)
    res.regime = HlRegime::BelowT;
  else if (xi < a1 * at)
    res.regime = HlRegime::AboveT;
  else if (xi > a1 * at)
    res.regime = HlRegime::AboveA1;
  else
    res.regime = HlRegime::Generic;
  return res;
}

}  // namespace dell
