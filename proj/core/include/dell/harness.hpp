#ifndef DELL_HARNESS_HPP
#define DELL_HARNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "dell/characters.hpp"
#include "dell/common.hpp"
#include "dell/double_l.hpp"

namespace dell {

enum class Quantity {
  Value,
  MaintermResidual,
  ProductApproxResidual,
  HyperbolaSum,
  OscillatoryRegimes
};

enum class CharacterFilter { AllPrimitivePairs, FixedPair };

struct SweepSpec {
  std::vector<long long> moduli;
  CharacterFilter character_filter = CharacterFilter::AllPrimitivePairs;
  std::vector<int> chi1_label, chi2_label;  // fixed-pair only
  std::vector<cplx> s1_grid, s2_grid;
  cplx z{0.0, 0.0};
  L2Method method = L2Method::Direct;
  Quantity quantity = Quantity::Value;
  std::vector<double> tau_list, xi_list;  // product-approx / hyperbola grids
  std::string output_path;
  double tolerance = 1e-9;
  bool record_timing = false;  // off by default: timings break rerun identity
};

/// One CSV record. Error rows keep the grid echo, set method to "error" and
/// carry the message in the quantity column suffix.
struct SweepRow {
  long long q = 0;
  std::string chi1_label, chi2_label;
  double sigma1 = 0, t1 = 0, sigma2 = 0, t2 = 0;
  double z_re = 0, z_im = 0;
  std::string method;
  double value_re = 0, value_im = 0;
  double err_est = 0;
  std::string quantity;
  double elapsed_ms = 0;
};

struct BoundModel {
  double exponent_q = 0.5;
  double exponent_t = 0.5;
  double epsilon = 0.1;
  bool extra_odd_term = false;
  double delta = 0.0;

  double predicted(double q, double t, double t1 = 0.0, double sigma_sum = 1.0) const;
};

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  long long n_points = 0;
};

struct VerifyConfig {
  std::string suite;  // theorem1 | theorem2 | lemma21 | lemma22 | hl
  double epsilon = 0.1;
  std::vector<long long> moduli;       // defaulted per suite when empty
  std::vector<double> tau_list;
  std::vector<double> xi_list;
  std::vector<double> t2_ladder;
  double sigma1 = 1.0;
  double sigma2 = 0.5;
  long long q_max = 101;  // lemma21 exhaustive prime range
  int workers = 0;        // 0: DOUBLE_ELL_WORKERS or hardware default
};

struct VerifyRow {
  std::string point;
  double measured = 0.0;
  double predicted = 0.0;
  double ratio = 0.0;
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyRow> rows;
  double max_ratio = 0.0;
  std::optional<double> fitted_slope;
  std::optional<double> measured_constant;
  bool passed = false;
  std::string summary;
};

/// Deterministic grid sweep: rows in lexicographic grid order regardless of
/// worker count (env DOUBLE_ELL_WORKERS); failures become error rows.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

void write_csv(const std::string& path, const std::vector<SweepRow>& rows);
std::vector<SweepRow> read_csv(const std::string& path);

/// Column accessor for fit inputs; supports the raw numeric columns plus
/// derived ones: qt2 (q|t2|), abs_value, abs_residual (synonym).
std::vector<double> extract_column(const std::vector<SweepRow>& rows,
                                   const std::string& name);

/// OLS of log y on log x. Throws on nonpositive data, listing the rows.
FitResult fit_exponent(const std::vector<double>& x,
                       const std::vector<double>& y);

VerifyReport verify_bounds(const VerifyConfig& config);

/// Effective worker count: explicit > env DOUBLE_ELL_WORKERS > hardware.
int resolve_workers(int requested);

}  // namespace dell

#endif  // DELL_HARNESS_HPP
