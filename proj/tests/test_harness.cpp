#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <vector>

#include "dell/harness.hpp"
#include "doctest.h"

using namespace dell;

namespace {
std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string temp_path(const char* stem) {
  return std::string("/tmp/") + stem + "-" +
         std::to_string(static_cast<long long>(::getpid())) + ".csv";
}
}  // namespace

TEST_CASE("csv round-trip is lossless") {
  std::vector<SweepRow> rows(3);
  rows[0] = {3,   "1",   "1",  2.0, 0.0,  2.5, 5.0, 0.0, 0.0,
             "psi", 0.1234567890123456789, -1e-300, 3.5e-12, "value", 0.0};
  rows[1].q = 12;
  rows[1].chi1_label = "1,0";
  rows[1].chi2_label = "0,1";
  rows[1].method = "error";
  rows[1].quantity = "value:error=message with, comma; and \"quotes\"";
  rows[2].q = 5;
  rows[2].value_re = 6.02214076e23;
  rows[2].value_im = -0.0;
  rows[2].quantity = "hyperbola-sum:tau=100";

  auto path = temp_path("roundtrip");
  write_csv(path, rows);
  auto back = read_csv(path);
  REQUIRE(back.size() == rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].q == rows[i].q);
    CHECK(back[i].chi1_label == rows[i].chi1_label);
    CHECK(back[i].chi2_label == rows[i].chi2_label);
    CHECK(back[i].sigma1 == rows[i].sigma1);
    CHECK(back[i].t1 == rows[i].t1);
    CHECK(back[i].sigma2 == rows[i].sigma2);
    CHECK(back[i].t2 == rows[i].t2);
    CHECK(back[i].z_re == rows[i].z_re);
    CHECK(back[i].z_im == rows[i].z_im);
    CHECK(back[i].method == rows[i].method);
    CHECK(back[i].value_re == rows[i].value_re);
    CHECK(back[i].value_im == rows[i].value_im);
    CHECK(back[i].err_est == rows[i].err_est);
    CHECK(back[i].quantity == rows[i].quantity);
    CHECK(back[i].elapsed_ms == rows[i].elapsed_ms);
  }
  std::remove(path.c_str());
}

TEST_CASE("exponent fit on exact and noisy power laws") {
  FitResult f = fit_exponent({1, 2, 4, 8}, {1, 4, 16, 64});
  CHECK(f.slope == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(f.r_squared == doctest::Approx(1.0).epsilon(1e-12));

  FitResult c = fit_exponent({1, 2, 4, 8}, {5, 5, 5, 5});
  CHECK(c.slope == doctest::Approx(0.0).epsilon(1e-12));

  // 1% multiplicative noise, 12 points: slope recovered within 0.05
  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> u(-0.01, 0.01);
  std::vector<double> xs, ys;
  for (int i = 0; i < 12; ++i) {
    double x = std::pow(1.8, i);
    xs.push_back(x);
    ys.push_back(3.0 * std::pow(x, 1.7) * (1.0 + u(rng)));
  }
  FitResult n = fit_exponent(xs, ys);
  CHECK(std::abs(n.slope - 1.7) < 0.05);

  CHECK_THROWS_AS(fit_exponent({1, 2, -3}, {1, 1, 1}), std::domain_error);
  CHECK_THROWS_AS(fit_exponent({1, 2, 3}, {1, 0, 1}), std::domain_error);
  CHECK_THROWS_AS(fit_exponent({2, 2, 2}, {1, 2, 3}), std::domain_error);
}

TEST_CASE("column extraction") {
  std::vector<SweepRow> rows(2);
  rows[0].q = 3;
  rows[0].t2 = -5.0;
  rows[0].value_re = 3.0;
  rows[0].value_im = 4.0;
  rows[1].q = 7;
  rows[1].t2 = 2.0;
  rows[1].value_re = 1.0;
  rows[1].value_im = 0.0;
  auto qt2 = extract_column(rows, "qt2");
  CHECK(qt2 == std::vector<double>{15.0, 14.0});
  auto av = extract_column(rows, "abs_value");
  CHECK(av == std::vector<double>{5.0, 1.0});
  auto ar = extract_column(rows, "abs_residual");
  CHECK(ar == av);
  CHECK_THROWS(extract_column(rows, "no-such-column"));
}

TEST_CASE("single-point sweep matches a direct evaluation") {
  SweepSpec spec;
  spec.moduli = {3};
  spec.character_filter = CharacterFilter::FixedPair;
  spec.chi1_label = {1};
  spec.chi2_label = {1};
  spec.s1_grid = {cplx{2.0, 0.0}};
  spec.s2_grid = {cplx{2.5, 0.0}};
  spec.method = L2Method::PsiSeries;
  auto rows = run_sweep(spec);
  REQUIRE(rows.size() == 1);

  EvalRequest req;
  req.s1 = {2.0, 0.0};
  req.s2 = {2.5, 0.0};
  req.chi1 = character_from_label(3, {1});
  req.chi2 = character_from_label(3, {1});
  auto direct = psi_series(req);
  CHECK(rows[0].value_re == direct.value.real());
  CHECK(rows[0].value_im == direct.value.imag());
  CHECK(rows[0].method == "psi-series");
}

TEST_CASE("sweep row count over all primitive pairs") {
  SweepSpec spec;
  spec.moduli = {3, 5};
  spec.character_filter = CharacterFilter::AllPrimitivePairs;
  spec.s1_grid = {cplx{2.0, 0.0}, cplx{2.5, 0.0}};
  spec.s2_grid = {cplx{2.5, 5.0}, cplx{3.0, 10.0}};
  spec.method = L2Method::Direct;
  auto rows = run_sweep(spec);

  long long expect = 0;
  for (long long q : {3, 5}) {
    long long prim = 0;
    for (const auto& chi : enumerate_characters(q))
      prim += chi.primitive() ? 1 : 0;
    expect += prim * prim;
  }
  expect *= 4;  // grid points
  CHECK(static_cast<long long>(rows.size()) == expect);
  for (const auto& r : rows) CHECK(r.method != "error");
}

TEST_CASE("sweep is byte-identical across worker counts") {
  SweepSpec spec;
  spec.moduli = {3, 5};
  spec.character_filter = CharacterFilter::AllPrimitivePairs;
  spec.s1_grid = {cplx{2.0, 0.0}};
  spec.s2_grid = {cplx{2.5, 5.0}, cplx{3.0, 10.0}};
  spec.method = L2Method::PsiSeries;

  auto p1 = temp_path("workers1");
  auto p4 = temp_path("workers4");
  ::setenv("DOUBLE_ELL_WORKERS", "1", 1);
  spec.output_path = p1;
  run_sweep(spec);
  ::setenv("DOUBLE_ELL_WORKERS", "4", 1);
  spec.output_path = p4;
  run_sweep(spec);
  ::unsetenv("DOUBLE_ELL_WORKERS");

  std::string a = slurp(p1), b = slurp(p4);
  CHECK(!a.empty());
  CHECK(a == b);
  std::remove(p1.c_str());
  std::remove(p4.c_str());
}

TEST_CASE("failed points become error rows, never dropped") {
  SweepSpec spec;
  spec.moduli = {3};
  spec.character_filter = CharacterFilter::FixedPair;
  spec.chi1_label = {1};
  spec.chi2_label = {1};
  // second grid point violates the direct-sum convergence margin
  spec.s1_grid = {cplx{2.0, 0.0}};
  spec.s2_grid = {cplx{2.5, 0.0}, cplx{1.0, 0.0}};
  spec.method = L2Method::Direct;
  auto rows = run_sweep(spec);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].method == "direct");
  CHECK(rows[1].method == "error");
  CHECK(rows[1].sigma2 == 1.0);

  // every point failing is an aggregate error
  spec.s2_grid = {cplx{1.0, 0.0}};
  CHECK_THROWS(run_sweep(spec));
}

TEST_CASE("verification reports are pure functions of their inputs") {
  VerifyConfig cfg;
  cfg.suite = "lemma22";
  auto a = verify_bounds(cfg);
  auto b = verify_bounds(cfg);
  CHECK(a.passed);
  CHECK(a.max_ratio == b.max_ratio);
  CHECK(a.summary == b.summary);
  REQUIRE(a.rows.size() == b.rows.size());
  for (size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].measured == b.rows[i].measured);
    CHECK(a.rows[i].ratio == b.rows[i].ratio);
  }

  cfg.suite = "no-such-suite";
  CHECK_THROWS(verify_bounds(cfg));
}

TEST_CASE("worker resolution") {
  ::setenv("DOUBLE_ELL_WORKERS", "3", 1);
  CHECK(resolve_workers(0) == 3);
  CHECK(resolve_workers(2) == 2);
  ::unsetenv("DOUBLE_ELL_WORKERS");
  CHECK(resolve_workers(0) >= 1);
}

TEST_CASE("bound model prediction shape") {
  BoundModel m;
  m.exponent_q = 0.5;
  m.exponent_t = 0.5;
  m.epsilon = 0.1;
  double p1 = m.predicted(3.0, 10.0);
  double p2 = m.predicted(3.0, 20.0);
  CHECK(p1 > 0.0);
  CHECK(p2 > p1);  // monotone in t
}
