#include "dell/double_l.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

namespace dell {

namespace {

constexpr cplx kI{0.0, 1.0};

double zeta_upper(double x) {  // crude upper bound for sum n^{-x}, x > 1
  return 1.0 + 1.0 / (x - 1.0);
}

void require_same_modulus(const EvalRequest& req) {
  if (req.chi1.modulus() != req.chi2.modulus())
    throw std::domain_error("evaluator: characters have different moduli");
}

void require_primitive(const EvalRequest& req) {
  if (!req.chi1.primitive() || !req.chi2.primitive())
    throw std::domain_error("evaluator: both characters must be primitive");
}

double elapsed_since(
    const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

bool near_integer(cplx v, double tol) {
  return std::abs(v.imag()) < tol &&
         std::abs(v.real() - std::round(v.real())) < tol;
}

}  // namespace

EvalResult direct_sum(const EvalRequest& req) {
  auto t0 = std::chrono::steady_clock::now();
  require_same_modulus(req);
  double sig1 = req.s1.real(), sig2 = req.s2.real(), rz = req.z.real();

  auto fail = [](const std::string& ineq) {
    throw std::domain_error("direct_sum: convergence margin violated: need " +
                            ineq);
  };
  if (sig2 - (1.0 + std::max(0.0, -rz)) < 0.2)
    fail("sigma2 >= 1 + max(0, -Re z) + 0.2");
  if (sig1 + sig2 + rz - 2.0 < 0.2) fail("sigma1 + sigma2 + Re z >= 2.2");
  if (sig2 + rz - 1.0 < 0.2) fail("sigma2 + Re z >= 1.2");

  const long long M = req.m_direct;
  const bool plain_z = req.z == cplx{0.0, 0.0};

  std::vector<cplx> pm(static_cast<size_t>(M) + 1), pn(static_cast<size_t>(M) + 1),
      pk(2 * static_cast<size_t>(M) + 1);
  for (long long m = 1; m <= M; ++m)
    pm[static_cast<size_t>(m)] =
        std::exp(-req.s1 * std::log(static_cast<double>(m)));
  for (long long n = 1; n <= M; ++n)
    pn[static_cast<size_t>(n)] =
        plain_z ? req.chi2(n)
                : req.chi2(n) * std::exp(-req.z * std::log(static_cast<double>(n)));
  for (long long k = 2; k <= 2 * M; ++k)
    pk[static_cast<size_t>(k)] =
        std::exp(-req.s2 * std::log(static_cast<double>(k)));

  std::vector<cplx> parts;
  parts.reserve(static_cast<size_t>(M));
  long long terms = 0;
  double magsum = 0.0;
  for (long long m = 1; m <= M; ++m) {
    cplx c1 = req.chi1(m);
    if (c1 == cplx{0.0, 0.0}) continue;
    cplx inner{0.0, 0.0};
    const cplx* pkm = pk.data() + m;
    for (long long n = 1; n <= M; ++n) inner += pn[static_cast<size_t>(n)] * pkm[n];
    cplx part = c1 * pm[static_cast<size_t>(m)] * inner;
    parts.push_back(part);
    magsum += std::abs(part);
    terms += M;
  }

  EvalResult out;
  out.method = L2Method::Direct;
  out.value = pairwise_reduce(std::move(parts));
  out.terms_summed = terms;
  out.partitions = 1;

  // split exponent so both one-dimensional tails converge
  double alpha = std::max(0.0, std::min(sig2, 1.1 - sig1));
  double em = sig1 + alpha;          // > 1
  double en = sig2 + rz - alpha;     // > 1
  double dm = static_cast<double>(M);
  double t1 = zeta_upper(em) * std::pow(dm, 1.0 - en) / (en - 1.0);
  double t2 = std::pow(dm, 1.0 - em) / (em - 1.0) * zeta_upper(en);
  out.error_estimate = t1 + t2 + 1e-14 * magsum;
  out.elapsed_seconds = elapsed_since(t0);
  return out;
}

EvalResult psi_series(const EvalRequest& req) {
  auto t0 = std::chrono::steady_clock::now();
  require_same_modulus(req);
  require_primitive(req);
  double sig1 = req.s1.real(), sig2 = req.s2.real(), rz = req.z.real();
  if (sig1 + sig2 <= 0.0)
    throw std::domain_error("psi_series: need sigma1 + sigma2 > 0");
  if (rz >= 1.0) throw std::domain_error("psi_series: need Re z < 1");
  cplx c = 2.0 - req.s2 - req.z;
  if (near_integer(c, 1e-6))
    throw std::domain_error(
        "psi_series: 2 - s2 - z within 1e-6 of an integer (degenerate "
        "expansion)");
  int N = req.n_order;
  if (N < 1 || N > 12) throw std::domain_error("psi_series: N_order out of range");

  long long q = req.chi1.modulus();
  double dq = static_cast<double>(q);
  int kappa2 = req.chi2.parity();
  DirichletCharacter chi2bar = req.chi2.conjugate();
  cplx pref = gauss_sum(req.chi2).epsilon_factor * complex_gamma(1.0 - req.z) /
              std::sqrt(dq);

  // finitely many products of ordinary L-values
  double log2piq = std::log(two_pi / dq);
  KahanSumC main;
  double err_main = 0.0, peak = 0.0;
  cplx poch_z = 1.0, poch_s2 = 1.0;
  double fact = 1.0, sign = 1.0;
  for (int k = 0; k < N; ++k) {
    cplx ck = sign * poch_z * poch_s2 /
              (std::exp((static_cast<double>(k) + 1.0 - req.z) * log2piq) * fact) *
              2.0 * std::cos(std::numbers::pi *
                             (req.z - static_cast<double>(k + 1 - kappa2)) / 2.0);
    LValue l1 = l_function(req.s1 + req.s2 + static_cast<double>(k), req.chi1);
    LValue l2 = l_function(static_cast<double>(k) + 1.0 - req.z, chi2bar);
    cplx term = ck * l1.value * l2.value;
    main.add(term);
    peak = std::max(peak, std::abs(term));
    err_main += std::abs(ck) * (std::abs(l1.value) * l2.error_estimate +
                                l1.error_estimate * std::abs(l2.value));
    poch_z *= 1.0 - req.z + static_cast<double>(k);
    poch_s2 *= req.s2 + static_cast<double>(k);
    fact *= static_cast<double>(k + 1);
    sign = -sign;
  }

  // remainder: expansion tails rho_N summed level-wise over l = m n
  cplx a = 1.0 - req.z;
  cplx mexp = 1.0 - req.s1 - req.s2 - req.z;
  cplx phase_p = std::polar(1.0, std::numbers::pi * kappa2 / 2.0);
  cplx phase_m = std::conj(phase_p);
  double abs_c = std::abs(c);
  long long lmin =
      std::max<long long>(24, static_cast<long long>(dq * (abs_c + 8.0) / two_pi) + 8);
  long long cap = std::max<long long>(req.m_remainder, lmin + 16);

  KahanSumC rem;
  double rmagsum = 0.0;
  double decay = static_cast<double>(N) + 1.0 - rz;  // |term_l| ~ C l^{-decay}
  double env = 0.0;
  double tail = 0.0;
  long long levels = 0;
  for (long long l = 1; l <= cap; ++l) {
    cplx coeff{0.0, 0.0};
    for (long long d : divisors(l)) {
      cplx v1 = req.chi1(d);
      if (v1 == cplx{0.0, 0.0}) continue;
      cplx v2 = chi2bar(l / d);
      if (v2 == cplx{0.0, 0.0}) continue;
      coeff += v1 * v2 * std::exp(mexp * std::log(static_cast<double>(d)));
    }
    ++levels;
    if (coeff != cplx{0.0, 0.0}) {
      cplx x = kI * (two_pi * static_cast<double>(l) / dq);
      cplx pair = phase_p * psi_asymptotic_remainder(a, c, x, N) +
                  phase_m * psi_asymptotic_remainder(a, c, -x, N);
      cplx term = coeff * pair;
      rem.add(term);
      rmagsum += std::abs(term);
      double e = std::abs(term) * std::pow(static_cast<double>(l), decay);
      env = std::max(env * 0.85, e);  // sliding envelope of the level decay
    }
    if (l >= lmin && l % 16 == 0) {
      tail = env * std::pow(static_cast<double>(l), 1.0 - decay) / (decay - 1.0);
      if (tail < 0.1 * std::min(req.tolerance, 1e-9)) break;
    }
  }
  tail = env * std::pow(static_cast<double>(std::min(cap, levels)), 1.0 - decay) /
         (decay - 1.0);

  EvalResult out;
  out.method = L2Method::PsiSeries;
  out.value = pref * (main.value() + rem.value());
  out.terms_summed = N + levels;
  out.partitions = 1;
  out.error_estimate =
      std::abs(pref) *
      (err_main + tail + 1e-15 * (peak + rmagsum) + 5e-16 * std::abs(main.value()));
  out.elapsed_seconds = elapsed_since(t0);
  return out;
}

EvalResult integral_repr(const EvalRequest& req) {
  auto t0 = std::chrono::steady_clock::now();
  require_same_modulus(req);
  require_primitive(req);
  if (req.z != cplx{0.0, 0.0})
    throw std::domain_error("integral_repr: defined for z = 0 only");
  double sig1 = req.s1.real(), sig2 = req.s2.real();
  if (sig2 <= 0.0) throw std::domain_error("integral_repr: need sigma2 > 0");
  if (sig1 + sig2 <= 1.2)
    throw std::domain_error(
        "integral_repr: need sigma1 + sigma2 > 1.2 (conditional-convergence "
        "guard)");

  long long q = req.chi1.modulus();
  double dq = static_cast<double>(q);
  int kappa2 = req.chi2.parity();
  DirichletCharacter chi2bar = req.chi2.conjugate();
  cplx s2 = req.s2;
  cplx pref = 2.0 * std::exp((s2 - 1.0) * std::log(two_pi)) *
              std::exp((0.5 - s2) * std::log(dq)) *
              gauss_sum(req.chi2).epsilon_factor;

  // The parity combination of the oscillatory tails collapses to a plain
  // (non-oscillatory) bilateral Psi average at xi = 2 pi l / q:
  //   even: xi^{1-s2} (Psi(+) + Psi(-)) / 2,  odd: xi^{1-s2} (Psi(-) - Psi(+)) / 2i.
  // Its leading asymptotic term is smooth in l; that part is resummed
  // exactly through ordinary L-values, leaving an l^{-3}/l^{-4} tail.
  cplx smooth_pref;  // coefficient of the extracted leading term
  cplx sm_m_exp, sm_n_exp;
  if (kappa2 == 0) {
    smooth_pref = s2 * std::exp((s2 + 1.0) * std::log(dq / two_pi));
    sm_m_exp = -req.s1 - s2 - 1.0;
    sm_n_exp = cplx{-2.0, 0.0};
  } else {
    smooth_pref = std::exp(s2 * std::log(dq / two_pi));
    sm_m_exp = -req.s1 - s2;
    sm_n_exp = cplx{-1.0, 0.0};
  }

  const long long cap = 200000;
  long long lmin = std::max<long long>(
      200, static_cast<long long>(dq * (2.0 * std::abs(s2.imag()) + 20.0) / two_pi));
  double p = (kappa2 == 0) ? 4.0 : 3.0;  // post-extraction decay exponent

  KahanSumC acc, smooth_partial;
  double magsum = 0.0, env = 0.0, tail = 0.0;
  long long levels = 0;
  for (long long l = 1; l <= cap; ++l) {
    cplx coeff{0.0, 0.0}, scoeff{0.0, 0.0};
    for (long long d : divisors(l)) {
      cplx v1 = req.chi1(d);
      if (v1 == cplx{0.0, 0.0}) continue;
      cplx v2 = chi2bar(l / d);
      if (v2 == cplx{0.0, 0.0}) continue;
      double lm = std::log(static_cast<double>(d));
      double ln = std::log(static_cast<double>(l / d));
      coeff += v1 * v2 * std::exp(-req.s1 * lm + (s2 - 1.0) * ln);
      scoeff += v1 * v2 * std::exp(sm_m_exp * lm + sm_n_exp * ln);
    }
    ++levels;
    smooth_partial.add(smooth_pref * scoeff);
    if (coeff != cplx{0.0, 0.0} || scoeff != cplx{0.0, 0.0}) {
      double xi = two_pi * static_cast<double>(l) / dq;
      cplx psi_p = tricomi_psi(cplx(1.0, 0.0), 2.0 - s2, kI * xi).value;
      cplx psi_m = tricomi_psi(cplx(1.0, 0.0), 2.0 - s2, -kI * xi).value;
      cplx combo = std::exp((1.0 - s2) * std::log(xi)) *
                   ((kappa2 == 0) ? (psi_p + psi_m) / 2.0
                                  : (psi_m - psi_p) / (2.0 * kI));
      cplx term = coeff * combo;
      acc.add(term);
      magsum += std::abs(term);
      double diff = std::abs(term - smooth_pref * scoeff);
      env = std::max(env * 0.9, diff * std::pow(static_cast<double>(l), p));
    }
    if (l >= lmin && l % 64 == 0) {
      tail = env * std::pow(static_cast<double>(l), 1.0 - p) / (p - 1.0);
      if (tail < 0.1 * std::min(req.tolerance, 1e-8)) break;
    }
  }
  tail = std::max(tail, env * std::pow(static_cast<double>(levels), 1.0 - p) /
                            (p - 1.0));

  // resum the extracted smooth part exactly
  LValue lf1 = l_function(req.s1 + s2 + ((kappa2 == 0) ? 1.0 : 0.0), req.chi1);
  LValue lf2 = l_function((kappa2 == 0) ? cplx{2.0, 0.0} : cplx{1.0, 0.0}, chi2bar);
  cplx smooth_tail = smooth_pref * lf1.value * lf2.value - smooth_partial.value();

  EvalResult out;
  out.method = L2Method::Integral;
  out.value = pref * (acc.value() + smooth_tail);
  out.terms_summed = levels;
  out.partitions = 1;
  out.error_estimate =
      std::abs(pref) *
      (tail + std::abs(smooth_pref) *
                  (std::abs(lf1.value) * lf2.error_estimate +
                   lf1.error_estimate * std::abs(lf2.value)) +
       1e-14 * magsum);
  out.elapsed_seconds = elapsed_since(t0);
  return out;
}

MainTermResult theorem2_main_term(cplx s1, cplx s2,
                                  const DirichletCharacter& chi1,
                                  const DirichletCharacter& chi2,
                                  bool with_reference) {
  double sig1 = s1.real(), sig2 = s2.real(), t2 = s2.imag();
  if (!(sig2 > 0.0 && sig2 < 1.0))
    throw std::domain_error("theorem2_main_term: need 0 < sigma2 < 1");
  if (sig1 + sig2 <= 0.0)
    throw std::domain_error("theorem2_main_term: need sigma1 + sigma2 > 0");
  if (std::abs(t2) < 2.0)
    throw std::domain_error("theorem2_main_term: need |t2| >= 2");
  if (!chi1.primitive() || !chi2.primitive())
    throw std::domain_error("theorem2_main_term: characters must be primitive");
  if (chi1.modulus() != chi2.modulus())
    throw std::domain_error("theorem2_main_term: characters have different moduli");

  long long q = chi1.modulus();
  double dq = static_cast<double>(q);
  int kappa2 = chi2.parity();
  DirichletCharacter chi2bar = chi2.conjugate();

  MainTermResult out;
  out.cutoff = dq * std::abs(t2) / two_pi;
  out.delta = std::max(0.0, 1.0 - sig1 - sig2);
  out.parity_branch = kappa2;

  long long mmax = static_cast<long long>(std::floor(out.cutoff));
  out.lattice_points = 0;
  for (long long m = 1; m <= mmax; ++m)
    out.lattice_points += static_cast<long long>(std::floor(out.cutoff / m));

  // Gamma(1-s2) sin(pi s2/2 + phi) assembled from two one-sided exponentials
  // so the underflowing and overflowing factors never meet.
  cplx lg = log_gamma(1.0 - s2);
  cplx p_plus = std::exp(lg + kI * std::numbers::pi * s2 / 2.0);
  cplx p_minus = std::exp(lg - kI * std::numbers::pi * s2 / 2.0);

  cplx pref = 2.0 * std::exp((s2 - 1.0) * std::log(two_pi)) *
              gauss_sum(chi2).value * std::exp(-s2 * std::log(dq));
  if (kappa2 == 1) pref /= kI;

  std::vector<cplx> parts;
  for (long long m = 1; m <= mmax; ++m) {
    cplx c1 = chi1(m);
    if (c1 == cplx{0.0, 0.0}) continue;
    cplx mp = c1 * std::exp(-s1 * std::log(static_cast<double>(m)));
    long long nmax = static_cast<long long>(std::floor(out.cutoff / m));
    KahanSumC inner;
    for (long long n = 1; n <= nmax; ++n) {
      cplx c2 = chi2bar(n);
      if (c2 == cplx{0.0, 0.0}) continue;
      double phi = two_pi * static_cast<double>((m * n) % q) / dq;
      cplx eip = std::polar(1.0, phi);
      cplx osc = (kappa2 == 0)
                     ? (eip * p_plus - std::conj(eip) * p_minus) / (2.0 * kI)
                     : (eip * p_plus + std::conj(eip) * p_minus) / 2.0;
      inner.add(c2 * std::exp((s2 - 1.0) * std::log(static_cast<double>(n))) * osc);
    }
    parts.push_back(mp * inner.value());
  }
  out.main_term = pref * pairwise_reduce(std::move(parts));

  if (with_reference) {
    EvalRequest ref;
    ref.s1 = s1;
    ref.s2 = s2;
    ref.chi1 = chi1;
    ref.chi2 = chi2;
    ref.tolerance = 1e-9;
    ref.n_order = 5;
    ref.m_remainder = 4000;
    for (int attempt = 0; attempt < 3 && !out.has_residual; ++attempt) {
      try {
        EvalResult r;
        if (attempt == 0)
          r = psi_series(ref);
        else if (attempt == 1)
          r = integral_repr(ref);
        else
          r = direct_sum(ref);
        out.residual = r.value - out.main_term;
        out.reference_error = r.error_estimate;
        out.has_residual = true;
      } catch (const std::exception&) {
      }
    }
  }
  return out;
}

BoundCheckRecord theorem1_bound_check(cplx s1, cplx s2,
                                      const DirichletCharacter& chi1,
                                      const DirichletCharacter& chi2,
                                      cplx value, double epsilon) {
  (void)chi1;
  double sig1 = s1.real(), sig2 = s2.real();
  double t1 = s1.imag(), t2 = s2.imag();
  double q = static_cast<double>(chi2.modulus());

  BoundCheckRecord rec;
  rec.delta = std::max(0.0, 1.0 - sig1 - sig2);
  rec.epsilon = epsilon;
  rec.parity_branch = chi2.parity();
  rec.magnitude = std::abs(value);
  double qt = q * std::abs(t2);
  rec.predicted = std::pow(qt, 0.5 + rec.delta + epsilon);
  if (rec.parity_branch == 1)
    rec.predicted += (1.0 + std::abs(t1 + t2)) * std::pow(q, 1.5 + epsilon) *
                     std::pow(qt, -std::min(1.0, (sig1 + sig2) / 2.0));
  rec.ratio = rec.magnitude / rec.predicted;
  return rec;
}

}  // namespace dell
