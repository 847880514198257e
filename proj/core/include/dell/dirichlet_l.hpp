#ifndef DELL_DIRICHLET_L_HPP
#define DELL_DIRICHLET_L_HPP

#include "dell/characters.hpp"
#include "dell/common.hpp"

namespace dell {

enum class LMethod { DirectSeries, HurwitzContinuation };

struct LValue {
  cplx s;
  std::string character_label;
  cplx value;
  LMethod method = LMethod::HurwitzContinuation;
  double error_estimate = 0.0;
};

struct ProductApproximation {
  cplx truncated_sum;  // sum_{mn<=tau} chi1(m)chi2(n) m^{-z1} n^{-z2}
  cplx true_product;
  double residual = 0.0;          // |true_product - truncated_sum|
  double bound_prediction = 0.0;  // error model with implicit constant 1
};

/// Hurwitz zeta(s, a) for a in (0,1], by Euler-Maclaurin with Bernoulli
/// corrections through B6; M adapted so the first omitted correction is
/// below 1e-13 relative (overridable for self-consistency checks).
/// Throws near the pole s=1 and outside the continuation range Re(s) > -2.
cplx hurwitz_zeta(cplx s, double a, int m_terms = 0);

/// L(s, chi) for nonprincipal chi, Re(s) > -2. The Hurwitz path runs
/// through the pole-subtracted zeta (the poles cancel against sum chi = 0),
/// so s = 1 is fine. The direct-series path sums the Dirichlet series with
/// an iterated partial-summation tail and is only offered for Re(s) > 1.1.
LValue l_function(cplx s, const DirichletCharacter& chi,
                  LMethod method = LMethod::HurwitzContinuation);

/// Hyperbola-truncated approximation to L(z1,chi1) L(z2,chi2) with the
/// three-case error model (cases split on Re(z1-z2) vs 1).
ProductApproximation truncated_product(cplx z1, cplx z2,
                                       const DirichletCharacter& chi1,
                                       const DirichletCharacter& chi2,
                                       double tau);

}  // namespace dell

#endif  // DELL_DIRICHLET_L_HPP
