#include "dell/common.hpp"

#include <algorithm>

namespace dell {

cplx pairwise_reduce(std::vector<cplx> parts) {
  if (parts.empty()) return {0.0, 0.0};
  size_t n = parts.size();
  while (n > 1) {
    size_t half = n / 2;
    for (size_t i = 0; i < half; ++i)
      parts[i] = parts[2 * i] + parts[2 * i + 1];
    if (n % 2) {
      parts[half] = parts[n - 1];
      n = half + 1;
    } else {
      n = half;
    }
  }
  return parts[0];
}

std::vector<std::pair<long long, int>> factorize(long long n) {
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

long long euler_phi(long long n) {
  long long phi = 1;
  for (auto [p, e] : factorize(n)) {
    long long pe = 1;
    for (int i = 1; i < e; ++i) pe *= p;
    phi *= pe * (p - 1);
  }
  return phi;
}

int moebius(long long n) {
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
    (void)p;
  }
  return sign;
}

std::vector<long long> divisors(long long n) {
  std::vector<long long> out;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long pow_mod(long long base, long long exp, long long mod) {
  long long result = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) result = (__int128)result * base % mod;
    base = (__int128)base * base % mod;
    exp >>= 1;
  }
  return result;
}

}  // namespace dell
