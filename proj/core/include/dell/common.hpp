#ifndef DELL_COMMON_HPP
#define DELL_COMMON_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dell {

using cplx = std::complex<double>;

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Thrown when an operation is asked to switch evaluation regime
/// (e.g. a convergent series called outside its cutoff).
class regime_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Compensated summation
// ---------------------------------------------------------------------------

/// Kahan-Neumaier accumulator for one real stream.
class KahanSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Compensated accumulator for a complex stream.
class KahanSumC {
 public:
  void add(cplx x) {
    re_.add(x.real());
    im_.add(x.imag());
  }
  cplx value() const { return {re_.value(), im_.value()}; }

 private:
  KahanSum re_, im_;
};

/// Fixed pairwise tree reduction. The result depends only on the input
/// order, not on any partitioning of the outer loop that produced it.
cplx pairwise_reduce(std::vector<cplx> parts);

// ---------------------------------------------------------------------------
// Double-double arithmetic (error-free transformations)
// ---------------------------------------------------------------------------
// Used where an oscillating series cancels by many orders of magnitude
// (the Kummer series on the imaginary axis). hi+lo carries ~31 digits.

struct dd {
  double hi = 0.0;
  double lo = 0.0;

  dd() = default;
  dd(double h) : hi(h) {}
  dd(double h, double l) : hi(h), lo(l) {}

  double to_double() const { return hi + lo; }
};

inline dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline dd two_prod(double a, double b) {
  double p = a * b;
  double err = std::fma(a, b, -p);
  return {p, err};
}

inline dd dd_add(dd a, dd b) {
  dd s = two_sum(a.hi, b.hi);
  double lo = s.lo + a.lo + b.lo;
  dd r = two_sum(s.hi, lo);
  return r;
}

inline dd dd_mul(dd a, dd b) {
  dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return two_sum(p.hi, p.lo);
}

inline dd dd_div(dd a, dd b) {
  double q1 = a.hi / b.hi;
  dd r = dd_add(a, dd_mul(dd(-q1), b));
  double q2 = r.hi / b.hi;
  r = dd_add(r, dd_mul(dd(-q2), b));
  double q3 = r.hi / b.hi;
  dd q = two_sum(q1, q2);
  q.lo += q3;
  return two_sum(q.hi, q.lo);
}

inline dd dd_neg(dd a) { return {-a.hi, -a.lo}; }

struct cdd {
  dd re, im;

  cdd() = default;
  cdd(dd r, dd i) : re(r), im(i) {}
  cdd(cplx z) : re(z.real()), im(z.imag()) {}

  cplx to_cplx() const { return {re.to_double(), im.to_double()}; }
  double abs_estimate() const { return std::hypot(re.hi, im.hi); }
};

inline cdd cdd_add(cdd a, cdd b) {
  return {dd_add(a.re, b.re), dd_add(a.im, b.im)};
}

inline cdd cdd_mul(cdd a, cdd b) {
  dd re = dd_add(dd_mul(a.re, b.re), dd_neg(dd_mul(a.im, b.im)));
  dd im = dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re));
  return {re, im};
}

inline cdd cdd_div(cdd a, cdd b) {
  dd den = dd_add(dd_mul(b.re, b.re), dd_mul(b.im, b.im));
  dd re = dd_add(dd_mul(a.re, b.re), dd_mul(a.im, b.im));
  dd im = dd_add(dd_mul(a.im, b.re), dd_neg(dd_mul(a.re, b.im)));
  return {dd_div(re, den), dd_div(im, den)};
}

// ---------------------------------------------------------------------------
// Small number theory helpers
// ---------------------------------------------------------------------------

std::vector<std::pair<long long, int>> factorize(long long n);
long long euler_phi(long long n);
int moebius(long long n);
std::vector<long long> divisors(long long n);
long long pow_mod(long long base, long long exp, long long mod);

}  // namespace dell

#endif  // DELL_COMMON_HPP
