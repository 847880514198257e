// End-to-end acceptance run: one pass/fail line per criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "dell/characters.hpp"
#include "dell/dirichlet_l.hpp"
#include "dell/double_l.hpp"
#include "dell/harness.hpp"
#include "dell/special_fn.hpp"

using namespace dell;
using cplxd = cplx;
constexpr double pi = std::numbers::pi;

namespace {

struct Criterion {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

double cabs(cplx v) { return std::abs(v); }

std::vector<DirichletCharacter> primitive_characters(long long q) {
  std::vector<DirichletCharacter> out;
  for (auto& chi : enumerate_characters(q))
    if (chi.primitive()) out.push_back(chi);
  return out;
}

// adaptive Simpson + integration-by-parts tail, the independent reference
// for the oscillatory integrals
cplx simpson_rec(const std::function<cplx(double)>& f, double a, double b,
                 cplx fa, cplx fm, cplx fb, cplx whole, double tol,
                 int depth) {
  double m = 0.5 * (a + b);
  cplx fl = f(0.5 * (a + m)), fr = f(0.5 * (m + b));
  cplx left = (m - a) / 6.0 * (fa + 4.0 * fl + fm);
  cplx right = (b - m) / 6.0 * (fm + 4.0 * fr + fb);
  cplx delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) < 15.0 * tol)
    return left + right + delta / 15.0;
  return simpson_rec(f, a, m, fa, fl, fm, left, tol * 0.5, depth - 1) +
         simpson_rec(f, m, b, fm, fr, fb, right, tol * 0.5, depth - 1);
}

cplx quadrature_tail(double xi, cplx s, bool sine) {
  double t = std::abs(s.imag());
  double big = std::max({400.0, xi + 10.0, 20.0 * t});
  auto integrand = [&](double u) {
    return std::exp(-s * std::log(u)) * (sine ? std::sin(u) : std::cos(u));
  };
  cplx fa = integrand(xi), fb = integrand(big),
       fm = integrand(0.5 * (xi + big));
  cplx whole = (big - xi) / 6.0 * (fa + 4.0 * fm + fb);
  cplx head = simpson_rec(integrand, xi, big, fa, fm, fb, whole, 1e-11, 40);
  cplx tail = 0.0, coef = 1.0, sk = s;
  bool cur_sine = sine;
  for (int k = 0; k < 12; ++k) {
    cplx pw = std::exp(-sk * std::log(big));
    if (!cur_sine) {
      tail += coef * (-pw * std::sin(big));
      coef *= sk;
    } else {
      tail += coef * (pw * std::cos(big));
      coef *= -sk;
    }
    cur_sine = !cur_sine;
    sk += 1.0;
    if (std::abs(coef) * std::pow(big, -sk.real()) < 1e-13) break;
  }
  return head + tail;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// ---------------------------------------------------------------------------

Criterion criterion_oracle_equivalence() {
  Criterion c{"cross-method agreement of psi-series and direct sum"};
  double worst = 0.0;
  long long points = 0;
  for (long long q : {3, 4, 5, 7}) {
    auto prims = primitive_characters(q);
    for (const auto& chi1 : prims)
      for (const auto& chi2 : prims)
        for (double sig1 : {2.0, 2.5})
          for (cplx s2 : {cplx{2.5, 5.0}, cplx{3.0, 10.0}})
            for (double zr : {0.0, -0.5}) {
              EvalRequest req;
              req.s1 = {sig1, 0.0};
              req.s2 = s2;
              req.z = {zr, 0.0};
              req.chi1 = chi1;
              req.chi2 = chi2;
              auto a = direct_sum(req);
              auto b = psi_series(req);
              double gap = cabs(a.value - b.value);
              double allow = a.error_estimate + b.error_estimate + 1e-8;
              worst = std::max(worst, gap / allow);
              ++points;
            }
  }
  c.passed = worst <= 1.0;
  c.detail = std::to_string(points) + " points, worst gap " + fmt(worst) +
             " of allowance";
  return c;
}

Criterion criterion_order_invariance() {
  Criterion c{"psi-series independence of the expansion order"};
  struct Pt {
    long long q;
    std::vector<int> l1, l2;
    cplx s1, s2;
    cplx z;
  };
  // grid stays inside q*|t2| <~ 60: the order-N recombination multiplies
  // L-values by coefficients ~ (q|s2|/2pi)^(N-1), so beyond that window
  // double precision cannot express the invariance at the 1e-8 level
  std::vector<Pt> pts = {
      {3, {1}, {1}, {2.0, 0}, {2.5, 5.0}, {0, 0}},
      {3, {1}, {1}, {1.0, 0}, {0.5, 10.0}, {0, 0}},
      {3, {1}, {1}, {1.5, 0}, {0.5, 25.0}, {0, 0}},
      {3, {1}, {1}, {0.8, 0}, {0.5, 12.0}, {-0.25, 0}},
      {3, {1}, {1}, {2.0, 3.0}, {1.2, 8.0}, {0, 0}},
      {4, {1}, {1}, {2.0, 0}, {2.5, 5.0}, {0, 0}},
      {4, {1}, {1}, {1.0, 0}, {0.5, 15.0}, {0, 0}},
      {4, {1}, {1}, {1.5, 0}, {0.8, 6.0}, {-0.5, 0}},
      {5, {1}, {2}, {2.0, 0}, {2.5, 5.0}, {0, 0}},
      {5, {2}, {2}, {1.0, 0}, {0.5, 10.0}, {0, 0}},
      {5, {1}, {3}, {1.2, 0}, {0.5, 8.0}, {0, 0}},
      {5, {3}, {1}, {1.5, 0}, {0.7, 9.0}, {0, 0}},
      {5, {2}, {2}, {2.0, 0}, {0.5, 12.0}, {0, 0}},
      {5, {2}, {1}, {1.8, 0}, {1.5, 4.0}, {-0.5, 0}},
      {7, {1}, {1}, {2.0, 0}, {2.5, 5.0}, {0, 0}},
      {7, {2}, {4}, {1.0, 0}, {0.5, 10.0}, {0, 0}},
      {7, {3}, {3}, {1.3, 0}, {0.6, 14.0}, {0, 0}},
      {7, {1}, {2}, {1.0, 2.0}, {0.5, 8.0}, {0, 0}},
      {3, {1}, {1}, {1.0, -5.0}, {0.5, 16.0}, {0, 0}},
      {4, {1}, {1}, {2.2, 0}, {0.5, 14.0}, {0, 0}},
  };
  double worst = 0.0;
  for (const auto& p : pts) {
    EvalRequest req;
    req.s1 = p.s1;
    req.s2 = p.s2;
    req.z = p.z;
    req.chi1 = character_from_label(p.q, p.l1);
    req.chi2 = character_from_label(p.q, p.l2);
    // long remainder sum: the truncated tail of R_N is the only part of the
    // value that depends on the order, and it must sit well below 1e-8
    req.m_remainder = 12000;
    cplx first;
    for (int n = 2; n <= 6; ++n) {
      req.n_order = n;
      cplx v = psi_series(req).value;
      if (n == 2)
        first = v;
      else
        worst = std::max(worst, cabs(v - first));
    }
  }
  c.passed = worst < 1e-8;
  c.detail = "20 points, orders 2..6, max variation " + fmt(worst);
  return c;
}

Criterion criterion_cross_continuation() {
  Criterion c{"psi-series vs integral representation in the strip"};
  struct Pt {
    long long q;
    std::vector<int> l1, l2;
    cplx s1, s2;
  };
  std::vector<Pt> pts = {
      {3, {1}, {1}, {2.0, 0}, {0.75, 5.0}},
      {3, {1}, {1}, {1.0, 0}, {0.5, 20.0}},
      {3, {1}, {1}, {1.2, 0}, {0.3, 8.0}},
      {3, {1}, {1}, {0.9, 0}, {0.9, 30.0}},
      {4, {1}, {1}, {1.5, 0}, {0.5, 11.0}},
      {4, {1}, {1}, {2.0, 0}, {0.25, 6.0}},
      {5, {2}, {2}, {1.5, 0}, {0.6, 12.0}},
      {5, {1}, {3}, {1.0, 0}, {0.8, 25.0}},
      {5, {2}, {2}, {0.8, 0}, {0.7, 17.0}},
      {7, {1}, {1}, {1.1, 0}, {0.4, 9.0}},
  };
  double worst = 0.0;
  for (const auto& p : pts) {
    EvalRequest req;
    req.s1 = p.s1;
    req.s2 = p.s2;
    req.chi1 = character_from_label(p.q, p.l1);
    req.chi2 = character_from_label(p.q, p.l2);
    req.n_order = 5;
    req.m_remainder = 4000;
    auto a = psi_series(req);
    auto b = integral_repr(req);
    double gap = cabs(a.value - b.value);
    double allow = a.error_estimate + b.error_estimate;
    worst = std::max(worst, gap / allow);
  }
  c.passed = worst <= 1.0;
  c.detail = "10 points, worst gap " + fmt(worst) + " of combined errors";
  return c;
}

struct LadderData {
  std::vector<double> qt, value_mag, residual_mag, bound_ratio;
};

LadderData run_ladder(long long q, std::vector<int> l1, std::vector<int> l2) {
  LadderData d;
  auto chi1 = character_from_label(q, l1);
  auto chi2 = character_from_label(q, l2);
  for (double t2 : {10.0, 20.0, 40.0, 80.0, 160.0, 320.0}) {
    cplx s1{1.0, 0.0}, s2{0.5, t2};
    auto mt = theorem2_main_term(s1, s2, chi1, chi2, true);
    EvalRequest req;
    req.s1 = s1;
    req.s2 = s2;
    req.chi1 = chi1;
    req.chi2 = chi2;
    req.n_order = 5;
    req.m_remainder = 4000;
    auto val = psi_series(req);
    double qt = static_cast<double>(q) * t2;
    double predicted = std::sqrt(static_cast<double>(q)) * std::pow(qt, 0.1);
    if (chi2.parity() == 1)
      predicted += (1.0 + t2) * std::pow(static_cast<double>(q), 1.6) *
                   std::pow(qt, -0.65);
    d.qt.push_back(qt);
    d.value_mag.push_back(cabs(val.value));
    d.residual_mag.push_back(cabs(mt.residual));
    d.bound_ratio.push_back(cabs(mt.residual) / predicted);
  }
  return d;
}

Criterion criterion_mainterm_residual(const LadderData& a,
                                      const LadderData& b) {
  Criterion c{"main-term residual exponent on the t2 ladders"};
  double slope = std::max(fit_exponent(a.qt, a.residual_mag).slope,
                          fit_exponent(b.qt, b.residual_mag).slope);
  double constant = 0.0;
  for (double r : a.bound_ratio) constant = std::max(constant, r);
  for (double r : b.bound_ratio) constant = std::max(constant, r);
  c.passed = slope <= 0.25;
  c.detail = "worst slope " + fmt(slope) + " (limit 0.25), measured constant " +
             fmt(constant);
  return c;
}

Criterion criterion_growth(const LadderData& a, const LadderData& b) {
  Criterion c{"growth exponent of the double L-values on the t2 ladders"};
  double slope = std::max(fit_exponent(a.qt, a.value_mag).slope,
                          fit_exponent(b.qt, b.value_mag).slope);
  c.passed = slope <= 0.65;
  c.detail = "worst slope " + fmt(slope) + " (limit 0.5 + 0.15)";
  return c;
}

Criterion criterion_hyperbola() {
  Criterion c{"hyperbola character sums under the sqrt(q) log q envelope"};
  VerifyConfig cfg;
  cfg.suite = "lemma21";
  cfg.q_max = 101;
  auto rep = verify_bounds(cfg);
  c.passed = rep.passed && rep.max_ratio <= 1.0;
  c.detail = "max ratio " + fmt(rep.max_ratio) + " over " +
             std::to_string(rep.rows.size()) + " cells, zero violations";
  return c;
}

Criterion criterion_truncated_product() {
  Criterion c{"truncated-product residuals against the error model"};
  VerifyConfig cfg;
  cfg.suite = "lemma22";
  auto rep = verify_bounds(cfg);
  c.passed = rep.passed && rep.max_ratio <= 5.0;
  c.detail = "max residual/bound " + fmt(rep.max_ratio) + " over " +
             std::to_string(rep.rows.size()) + " points (limit 5)";
  return c;
}

Criterion criterion_oscillatory() {
  Criterion c{"oscillatory-integral regime bounds and quadrature spot checks"};
  VerifyConfig cfg;
  cfg.suite = "hl";
  auto rep = verify_bounds(cfg);
  double spot_worst = 0.0;
  struct Pt {
    double xi, sigma, t;
  };
  for (Pt p : {Pt{0.1, 0.5, 5.0}, Pt{1.0, 0.5, 20.0}, Pt{25.0, 0.25, 30.0},
               Pt{200.0, 0.75, 12.0}}) {
    cplx s{p.sigma, p.t};
    auto r = oscillatory_integral(p.xi, s);
    spot_worst = std::max(
        spot_worst, cabs(r.cosine_part - quadrature_tail(p.xi, s, false)));
    spot_worst = std::max(
        spot_worst, cabs(r.sine_part - quadrature_tail(p.xi, s, true)));
  }
  c.passed = rep.passed && rep.max_ratio <= 10.0 && spot_worst < 1e-7;
  c.detail = "regime constant " + fmt(rep.max_ratio) +
             " (limit 10), quadrature gap " + fmt(spot_worst);
  return c;
}

Criterion criterion_identities() {
  Criterion c{"special-function identity suite"};
  bool ok = true;
  std::ostringstream os;

  // Kummer transform Psi(a,c;x) = x^{1-c} Psi(a-c+1,2-c;x) on a
  // deterministic imaginary-axis grid
  double worst_kt = 0.0;
  for (int i = 0; i < 40; ++i) {
    double xi = 0.5 * std::pow(160.0, (i + 0.5) / 40.0);
    double sign = (i % 2 == 0) ? 1.0 : -1.0;
    double t2 = -20.0 + 40.0 * ((i * 7) % 40) / 40.0;
    double sig2 = 0.3 + 2.2 * ((i * 11) % 40) / 40.0;
    double zr = -0.5 * ((i * 3) % 40) / 40.0;
    cplx a = (i % 3 == 0) ? cplx{1.0, 0.0} : cplx{1.0 - zr, 0.0};
    cplx cc = cplx{2.0 - sig2, -t2} - cplx{zr, 0.0};
    cplx x{0.0, sign * xi};
    try {
      cplx lhs = tricomi_psi(a, cc, x).value;
      cplx rhs = std::exp((1.0 - cc) * std::log(x)) *
                 tricomi_psi(a - cc + 1.0, 2.0 - cc, x).value;
      worst_kt = std::max(worst_kt, cabs(lhs - rhs) / cabs(lhs));
    } catch (const regime_error&) {
    }
  }
  ok = ok && worst_kt < 1e-9;
  os << "transform " << fmt(worst_kt);

  // incomplete-gamma recurrence
  double worst_ig = 0.0;
  for (int i = 0; i < 24; ++i) {
    double mag = 0.5 + 29.0 * i / 24.0;
    cplx z = (i % 2 == 0) ? cplx{0.0, (i % 4 == 0 ? mag : -mag)}
                          : cplx{0.3 + mag / 2.0, mag / 3.0};
    cplx a{0.4 + 0.05 * i, (i % 5) - 2.0};
    cplx lhs = upper_incomplete_gamma(a + 1.0, z);
    cplx rhs =
        a * upper_incomplete_gamma(a, z) + std::exp(a * std::log(z) - z);
    worst_ig =
        std::max(worst_ig, cabs(lhs - rhs) / std::max(1.0, cabs(lhs)));
  }
  ok = ok && worst_ig < 1e-9;
  os << ", incomplete-gamma " << fmt(worst_ig);

  // gamma recurrence
  double worst_g = 0.0;
  for (cplx s : {cplx{1.0, 5.0}, cplx{0.3, -9.0}, cplx{2.5, 14.0}}) {
    cplx lhs = complex_gamma(s + 1.0);
    cplx rhs = s * complex_gamma(s);
    worst_g = std::max(worst_g, cabs(lhs - rhs) / cabs(lhs));
  }
  ok = ok && worst_g < 1e-9;
  os << ", gamma recurrence " << fmt(worst_g);

  // golden values
  double g1 = cabs(kummer_1f1({1, 0}, {1.5, -3.0}, {0.0, 2.0 * pi * 3 / 7}) -
                   cplx{0.53104174164211967, 0.08706464059704113});
  double g2 = cabs(upper_incomplete_gamma({0.5, 0}, {1, 0}) -
                   cplx{0.27880558528066198, 0.0});
  ok = ok && g1 < 1e-10 && g2 < 1e-10;
  os << ", golden " << fmt(std::max(g1, g2));

  c.passed = ok;
  c.detail = os.str();
  return c;
}

Criterion criterion_characters() {
  Criterion c{"character counts, gauss sums, and partial-sum bounds"};
  bool ok = true;
  double worst_tau = 0.0, worst_pv = 0.0;
  for (long long q = 2; q <= 500; ++q) {
    auto chars = enumerate_characters(q);
    if (static_cast<long long>(chars.size()) != euler_phi(q)) ok = false;
    long long prim = 0;
    for (const auto& chi : chars) prim += chi.primitive() ? 1 : 0;
    if (prim != primitive_character_count(q)) ok = false;
    for (const auto& chi : chars) {
      if (!chi.primitive()) continue;
      if (q <= 200)
        worst_tau = std::max(
            worst_tau, std::abs(gauss_sum(chi).magnitude -
                                std::sqrt(static_cast<double>(q))));
      if (!chi.principal())
        worst_pv = std::max(
            worst_pv, partial_sum_max(chi) /
                          (std::sqrt(static_cast<double>(q)) *
                           std::log(static_cast<double>(q))));
    }
  }
  ok = ok && worst_tau < 1e-9 && worst_pv <= 1.0;
  c.passed = ok;
  c.detail = "q <= 500; gauss-sum magnitude gap " + fmt(worst_tau) +
             ", polya-vinogradov ratio " + fmt(worst_pv);
  return c;
}

Criterion criterion_determinism() {
  Criterion c{"byte-identical sweeps across worker counts"};
  SweepSpec spec;
  spec.moduli = {3, 5};
  spec.character_filter = CharacterFilter::AllPrimitivePairs;
  spec.s1_grid = {cplx{2.0, 0.0}};
  spec.s2_grid = {cplx{2.5, 5.0}, cplx{3.0, 10.0}};
  spec.method = L2Method::PsiSeries;

  auto render = [&](const char* workers) {
    ::setenv("DOUBLE_ELL_WORKERS", workers, 1);
    std::string path = std::string("/tmp/acceptance-sweep-") + workers + ".csv";
    spec.output_path = path;
    run_sweep(spec);
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    std::remove(path.c_str());
    return os.str();
  };
  std::string one = render("1");
  std::string four = render("4");
  ::unsetenv("DOUBLE_ELL_WORKERS");
  c.passed = !one.empty() && one == four;
  c.detail = std::to_string(one.size()) + " bytes, identical";
  return c;
}

}  // namespace

int main() {
  std::vector<Criterion> results;
  auto timed = [&](std::function<Criterion()> fn) {
    auto t0 = std::chrono::steady_clock::now();
    Criterion c = fn();
    c.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    results.push_back(std::move(c));
  };

  timed(criterion_oracle_equivalence);
  timed(criterion_order_invariance);
  timed(criterion_cross_continuation);
  {
    auto t0 = std::chrono::steady_clock::now();
    LadderData odd = run_ladder(3, {1}, {1});
    LadderData even = run_ladder(5, {2}, {2});
    double shared = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    Criterion c4 = criterion_mainterm_residual(odd, even);
    c4.seconds = shared;
    results.push_back(c4);
    Criterion c5 = criterion_growth(odd, even);
    results.push_back(c5);
  }
  timed(criterion_hyperbola);
  timed(criterion_truncated_product);
  timed(criterion_oscillatory);
  timed(criterion_identities);
  timed(criterion_characters);
  timed(criterion_determinism);

  bool all = true;
  for (size_t i = 0; i < results.size(); ++i) {
    const auto& c = results[i];
    all = all && c.passed;
    std::printf("%s  %2zu. %s — %s (%.1fs)\n", c.passed ? "PASS" : "FAIL",
                i + 1, c.name.c_str(), c.detail.c_str(), c.seconds);
  }
  std::printf("%s\n", all ? "ALL CRITERIA PASSED" : "CRITERIA FAILED");
  return all ? 0 : 1;
}
