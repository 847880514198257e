#ifndef DELL_DOUBLE_L_HPP
#define DELL_DOUBLE_L_HPP

#include "dell/characters.hpp"
#include "dell/common.hpp"
#include "dell/dirichlet_l.hpp"
#include "dell/special_fn.hpp"

namespace dell {

enum class L2Method { Direct, PsiSeries, Integral };

struct EvalRequest {
  cplx s1;
  cplx s2;
  cplx z{0.0, 0.0};
  DirichletCharacter chi1;
  DirichletCharacter chi2;
  L2Method method = L2Method::Direct;
  double tolerance = 1e-9;
  long long m_direct = 4000;     // square truncation of the defining series
  long long m_remainder = 2000;  // level cap (mn <= cap) for remainder sums
  int n_order = 3;               // asymptotic order N of the expansion
};

struct EvalResult {
  cplx value;
  L2Method method = L2Method::Direct;
  double error_estimate = 0.0;
  long long terms_summed = 0;
  double elapsed_seconds = 0.0;
  int partitions = 1;  // reduction partition count (bit-stability contract)
};

struct MainTermResult {
  cplx main_term;
  double cutoff = 0.0;  // q|t2|/2pi
  long long lattice_points = 0;
  cplx residual{0.0, 0.0};  // reference - main_term
  bool has_residual = false;
  double reference_error = 0.0;  // error estimate of the reference evaluator
  double delta = 0.0;  // max{0, 1 - sigma1 - sigma2}
  int parity_branch = 0;
};

struct BoundCheckRecord {
  double magnitude = 0.0;
  double predicted = 0.0;
  double ratio = 0.0;
  double delta = 0.0;
  double epsilon = 0.1;
  int parity_branch = 0;
};

/// Truncated defining series of the interpolated double L-series, valid in
/// the absolute-convergence region (with a 0.2 margin); z = 0 gives the
/// plain double L-function.
EvalResult direct_sum(const EvalRequest& req);

/// Analytic continuation via the confluent-hypergeometric expansion:
/// finitely many products of ordinary L-values plus an explicit remainder
/// sum of asymptotic-expansion tails. Valid for sigma1+sigma2 > 0, Re z < 1,
/// both characters primitive.
EvalResult psi_series(const EvalRequest& req);

/// Cross-check continuation through the oscillatory-integral representation
/// (z = 0 only; sigma2 > 0 and sigma1+sigma2 > 1.2).
EvalResult integral_repr(const EvalRequest& req);

/// Explicit finite main term of the approximate functional equation, with
/// parity-dependent sin/cos branch, plus residual against a reference
/// evaluator when requested.
MainTermResult theorem2_main_term(cplx s1, cplx s2,
                                  const DirichletCharacter& chi1,
                                  const DirichletCharacter& chi2,
                                  bool with_reference = true);

/// Ratio of |value| to the parity-dependent growth bound (epsilon slack in
/// the exponent), for aggregation by the sweep harness.
BoundCheckRecord theorem1_bound_check(cplx s1, cplx s2,
                                      const DirichletCharacter& chi1,
                                      const DirichletCharacter& chi2,
                                      cplx value, double epsilon = 0.1);

}  // namespace dell

#endif  // DELL_DOUBLE_L_HPP
