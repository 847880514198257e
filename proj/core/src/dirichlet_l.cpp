#include "dell/dirichlet_l.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dell {

namespace {

// B_{2j}/(2j)! for the correction terms, j = 1..3, plus the first omitted
// coefficient B8/8! used for the adaptive-M stopping rule.
constexpr double kBern[3] = {1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0};
constexpr double kBernNext = -1.0 / 1209600.0;

// (x^{1-s} - 1)/(s - 1); the pole-subtracted tail integral. Series at s=1.
cplx pole_subtracted_tail(cplx s, double x) {
  cplx u = s - 1.0;
  double lx = std::log(x);
  if (std::abs(u) < 1e-4) {
    // (e^{-u lx} - 1)/u = -lx (1 - u lx/2 + (u lx)^2/6 - (u lx)^3/24)
    cplx w = u * lx;
    return -lx * (1.0 - w / 2.0 + w * w / 6.0 - w * w * w / 24.0);
  }
  return (std::exp(-u * lx) - 1.0) / u;
}

// Euler-Maclaurin zeta(s,a); when regularized, the 1/(s-1) pole is
// subtracted so the result is analytic at s=1 (characters kill the
// subtracted constant because sum chi(a) = 0).
cplx hurwitz_core(cplx s, double a, int m_terms, bool regularized) {
  if (!(a > 0.0 && a <= 1.0))
    throw std::domain_error("hurwitz_zeta: a must lie in (0,1]");
  if (s.real() <= -2.0)
    throw std::domain_error("hurwitz_zeta: continuation range is Re(s) > -2");

  int m = m_terms;
  if (m <= 0)
    m = std::max(24, static_cast<int>(std::ceil(1.5 * std::abs(s.imag()))) + 8);

  for (int attempt = 0; attempt < 6; ++attempt) {
    KahanSumC acc;
    for (int n = 0; n < m; ++n)
      acc.add(std::exp(-s * std::log(static_cast<double>(n) + a)));
    double x = static_cast<double>(m) + a;
    double lx = std::log(x);
    if (regularized)
      acc.add(pole_subtracted_tail(s, x));
    else
      acc.add(std::exp((1.0 - s) * lx) / (s - 1.0));
    cplx xs = std::exp(-s * lx);  // x^{-s}
    acc.add(0.5 * xs);
    cplx poch = s;  // (s)_{2j-1} built incrementally
    cplx xpow = xs / x;
    for (int j = 0; j < 3; ++j) {
      acc.add(kBern[j] * poch * xpow);
      poch *= (s + static_cast<double>(2 * j + 1)) * (s + static_cast<double>(2 * j + 2));
      xpow /= x * x;
    }
    cplx omitted = kBernNext * poch * xpow;
    cplx val = acc.value();
    if (m_terms > 0 || std::abs(omitted) < 1e-13 * std::max(std::abs(val), 1e-30))
      return val;
    m *= 2;
  }
  throw std::runtime_error("hurwitz_zeta: Euler-Maclaurin did not settle");
}

// Tail of sum_{n>N} chi(n) n^{-s} by three rounds of partial summation.
// Each round peels off the mean of a bounded periodic partial-sum sequence;
// what remains decays one power of n faster.
cplx direct_series_tail(cplx s, const DirichletCharacter& chi, long long N,
                        double* err_out) {
  long long q = chi.modulus();
  size_t uq = static_cast<size_t>(q);

  // periodic partial-sum ladders; level l has mean m_l and a mean-zero
  // periodic part, indexed by (n - N - 1) mod q
  std::vector<cplx> level(uq);
  cplx run{0.0, 0.0};
  for (long long j = 0; j < q; ++j) {
    run += chi(N + 1 + j);
    level[static_cast<size_t>(j)] = run;
  }
  cplx means[3];
  double maxabs = 0.0;
  for (int l = 0; l < 3; ++l) {
    cplx mean{0.0, 0.0};
    for (const cplx& v : level) mean += v;
    mean /= static_cast<double>(q);
    means[l] = mean;
    if (l == 2) {
      for (cplx& v : level) v -= mean;
      for (const cplx& v : level) maxabs = std::max(maxabs, std::abs(v));
      break;
    }
    cplx acc{0.0, 0.0};
    std::vector<cplx> next(uq);
    for (size_t j = 0; j < uq; ++j) {
      acc += level[j] - mean;
      next[j] = acc;
    }
    level = std::move(next);
  }

  auto f = [&](long long n) {
    return std::exp(-s * std::log(static_cast<double>(n)));
  };
  // g1 = f(n)-f(n+1) via expm1 to dodge the cancellation; higher
  // differences start from the accurate g1 values
  auto g1 = [&](long long n) {
    double dn = static_cast<double>(n);
    cplx e = std::exp(-s * std::log1p(1.0 / dn)) - 1.0;
    return -f(n) * e;
  };

  KahanSumC acc;
  acc.add(means[0] * f(N + 1));
  acc.add(means[1] * g1(N + 1));
  acc.add(means[2] * (g1(N + 1) - g1(N + 2)));

  double sig = s.real();
  double smag3 = std::abs(s) * std::abs(s + 1.0) * std::abs(s + 2.0);
  cplx w0 = g1(N + 1), w1 = g1(N + 2), w2 = g1(N + 3);
  for (long long n = N + 1;; ++n) {
    cplx g3 = (w0 - w1) - (w1 - w2);
    acc.add(level[static_cast<size_t>((n - N - 1) % q)] * g3);
    double nn = static_cast<double>(n + 1);
    double rem = maxabs * smag3 * std::pow(nn, -sig - 2.0) / (sig + 2.0);
    if (rem < 1e-14 || n - N > 2000000) {
      *err_out = rem;
      break;
    }
    w0 = w1;
    w1 = w2;
    w2 = g1(n + 3);
  }
  return acc.value();
}

}  // namespace

cplx hurwitz_zeta(cplx s, double a, int m_terms) {
  if (std::abs(s - 1.0) < 1e-9)
    throw std::domain_error("hurwitz_zeta: s at the pole s = 1");
  return hurwitz_core(s, a, m_terms, /*regularized=*/false);
}

LValue l_function(cplx s, const DirichletCharacter& chi, LMethod method) {
  if (chi.principal())
    throw std::domain_error("l_function: principal character (L has a pole)");
  if (s.real() <= -2.0)
    throw std::domain_error("l_function: continuation range is Re(s) > -2");

  LValue out;
  out.s = s;
  out.character_label = chi.label_string();
  out.method = method;

  long long q = chi.modulus();
  if (method == LMethod::HurwitzContinuation) {
    double lq = std::log(static_cast<double>(q));
    KahanSumC acc;
    for (long long a = 1; a <= q; ++a) {
      cplx v = chi(a);
      if (v == cplx{0.0, 0.0}) continue;
      acc.add(v * hurwitz_core(s, static_cast<double>(a) / static_cast<double>(q),
                               0, /*regularized=*/true));
    }
    out.value = std::exp(-s * lq) * acc.value();
    out.error_estimate =
        1e-12 * std::max(std::abs(out.value), 1.0) * static_cast<double>(q);
    return out;
  }

  if (s.real() <= 1.1)
    throw std::domain_error(
        "l_function: direct series supported only for Re(s) > 1.1");
  const long long N = 1000;
  KahanSumC acc;
  for (long long n = 1; n <= N; ++n) {
    cplx v = chi(n);
    if (v == cplx{0.0, 0.0}) continue;
    acc.add(v * std::exp(-s * std::log(static_cast<double>(n))));
  }
  double tail_err = 0.0;
  acc.add(direct_series_tail(s, chi, N, &tail_err));
  out.value = acc.value();
  out.error_estimate = tail_err + 1e-13 * std::max(std::abs(out.value), 1.0);
  return out;
}

ProductApproximation truncated_product(cplx z1, cplx z2,
                                       const DirichletCharacter& chi1,
                                       const DirichletCharacter& chi2,
                                       double tau) {
  double x1 = z1.real(), x2 = z2.real();
  if (!(x1 > 0.0 && x2 > 0.0 && x1 + x2 > 1.0))
    throw std::domain_error(
        "truncated_product: need Re(z1) > 0, Re(z2) > 0, Re(z1)+Re(z2) > 1");
  if (tau < 2.0) throw std::domain_error("truncated_product: tau must be >= 2");
  if (chi1.principal() || chi2.principal())
    throw std::domain_error("truncated_product: characters must be nonprincipal");

  ProductApproximation out;
  KahanSumC acc;
  long long mmax = static_cast<long long>(std::floor(tau));
  for (long long m = 1; m <= mmax; ++m) {
    cplx c1 = chi1(m);
    if (c1 == cplx{0.0, 0.0}) continue;
    cplx mp = c1 * std::exp(-z1 * std::log(static_cast<double>(m)));
    long long nmax = static_cast<long long>(std::floor(tau / static_cast<double>(m)));
    KahanSumC inner;
    for (long long n = 1; n <= nmax; ++n) {
      cplx c2 = chi2(n);
      if (c2 == cplx{0.0, 0.0}) continue;
      inner.add(c2 * std::exp(-z2 * std::log(static_cast<double>(n))));
    }
    acc.add(mp * inner.value());
  }
  out.truncated_sum = acc.value();

  LValue l1 = l_function(z1, chi1);
  LValue l2 = l_function(z2, chi2);
  out.true_product = l1.value * l2.value;
  out.residual = std::abs(out.true_product - out.truncated_sum);

  double q = static_cast<double>(chi1.modulus());
  double lq = std::log(q);
  double az1 = std::abs(z1), az2 = std::abs(z2);
  double main_term = (1.0 + az1 + az2 + az1 * az2) * q * lq * lq *
                     std::pow(tau, -std::min(x1, x2));
  double d = x1 - x2;
  double cased;
  if (std::abs(d - 1.0) < 1e-9)
    cased = std::pow(tau, -x2) * std::log(tau);
  else if (d > 1.0)
    cased = std::pow(tau, -x2);
  else
    cased = std::pow(tau, (1.0 - x1 - x2) / 2.0);
  out.bound_prediction =
      main_term + (1.0 + std::abs(z1 - z2)) * std::sqrt(q) * lq * cased;
  return out;
}

}  // namespace dell
