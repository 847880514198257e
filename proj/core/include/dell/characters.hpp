#ifndef DELL_CHARACTERS_HPP
#define DELL_CHARACTERS_HPP

#include <string>
#include <vector>

#include "dell/common.hpp"

namespace dell {

// A fully materialized Dirichlet character mod q. Values are stored as a
// length-q table indexed by residue; non-units hold 0. Internally the table
// is backed by exact integer exponents over lcm of the generator orders, so
// multiplicativity and conductor tests are exact.
class DirichletCharacter {
 public:
  long long modulus() const { return q_; }
  const std::vector<cplx>& values() const { return values_; }
  const std::vector<int>& label() const { return label_; }
  int parity() const { return parity_; }  // kappa: 0 even, 1 odd
  bool primitive() const { return conductor_ == q_; }
  long long conductor() const { return conductor_; }
  long long order() const { return order_; }
  bool principal() const { return order_ == 1; }

  cplx operator()(long long n) const {
    long long r = n % q_;
    if (r < 0) r += q_;
    return values_[static_cast<size_t>(r)];
  }

  DirichletCharacter conjugate() const;

  /// Exact root-of-unity exponent at a residue: chi(r) = e^{2 pi i e/D}
  /// with D = exponent_denominator(); -1 marks a non-unit residue.
  long long value_exponent(long long r) const;
  long long exponent_denominator() const { return exp_den_; }

  std::string label_string() const;

 private:
  friend struct CharacterBuilder;

  long long q_ = 0;
  std::vector<cplx> values_;
  std::vector<int> label_;
  int parity_ = 0;
  long long conductor_ = 1;
  long long order_ = 1;
  long long exp_den_ = 1;           // lcm of generator orders
  std::vector<long long> exps_;     // per-residue exponents, -1 off units
};

struct GaussSumResult {
  cplx value;            // tau(chi)
  cplx epsilon_factor;   // tau(chi) / (i^kappa sqrt(q))
  double magnitude;      // |tau(chi)|
};

/// All phi(q) characters mod q, ordered lexicographically by exponent label
/// over the canonical generators (least primitive root for odd prime powers,
/// {-1, 5} for 2^e with e >= 3).
std::vector<DirichletCharacter> enumerate_characters(long long q);

/// Single character from its exponent label (same conventions).
DirichletCharacter character_from_label(long long q,
                                        const std::vector<int>& label);

bool is_primitive(const DirichletCharacter& chi);

GaussSumResult gauss_sum(const DirichletCharacter& chi);

/// max over 1 <= x <= q of |sum_{n<=x} chi(n)|; principal characters are
/// rejected (their partial sums grow linearly).
double partial_sum_max(const DirichletCharacter& chi);

/// sum over m <= xi, mn <= tau of chi1(m) chi2(n); both characters must be
/// nonprincipal with the same modulus and tau >= xi.
cplx hyperbola_sum(const DirichletCharacter& chi1,
                   const DirichletCharacter& chi2, double tau, double xi);

/// Number of primitive characters mod q by Moebius summation over induced
/// moduli; independent of the enumeration path.
long long primitive_character_count(long long q);

std::vector<int> parse_label(const std::string& text);

}  // namespace dell

#endif  // DELL_CHARACTERS_HPP
