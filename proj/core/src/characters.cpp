#include "dell/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace dell {

namespace {

struct Generator {
  long long prime_power;  // the p^e block this generator lives in
  long long value;        // generator as a residue mod p^e
  long long order;
};

struct GroupStructure {
  long long q = 1;
  std::vector<Generator> gens;
  // exponent vector per residue mod q (empty for non-units)
  std::vector<std::vector<long long>> dlog;
  long long exponent = 1;  // lcm of generator orders (1 for trivial group)
};

bool is_primitive_root(long long g, long long pk, long long phi) {
  if (std::gcd(g, pk) != 1) return false;
  for (auto [ell, e] : factorize(phi)) {
    (void)e;
    if (pow_mod(g, phi / ell, pk) == 1) return false;
  }
  return true;
}

long long least_primitive_root(long long pk) {
  long long phi = euler_phi(pk);
  for (long long g = 2; g < pk; ++g)
    if (is_primitive_root(g, pk, phi)) return g;
  throw std::logic_error("no primitive root found");
}

// Generators for the units of one prime-power block.
std::vector<Generator> block_generators(long long p, int e, long long pk) {
  std::vector<Generator> out;
  if (p == 2) {
    if (e == 1) return out;  // trivial group
    if (e == 2) {
      out.push_back({pk, 3, 2});
      return out;
    }
    out.push_back({pk, pk - 1, 2});
    out.push_back({pk, 5, pk / 4});
    return out;
  }
  out.push_back({pk, least_primitive_root(pk), euler_phi(pk)});
  return out;
}

// CRT: x == r mod m, x == 1 mod (q/m)
long long crt_lift(long long r, long long m, long long q) {
  long long n = q / m;
  if (n == 1) return r % q;
  // x = r + m*t with r + m*t == 1 mod n
  long long minv = 0;
  for (long long t = 0; t < n; ++t)
    if ((m * t) % n == ((1 - r) % n + n) % n) {
      minv = t;
      break;
    }
  return (r + m * minv) % q;
}

GroupStructure build_group(long long q) {
  GroupStructure grp;
  grp.q = q;
  auto fac = factorize(q);
  std::sort(fac.begin(), fac.end());

  // per-block discrete log maps
  struct Block {
    long long pk;
    std::vector<Generator> gens;
    std::unordered_map<long long, std::vector<long long>> dlog;
  };
  std::vector<Block> blocks;
  for (auto [p, e] : fac) {
    long long pk = 1;
    for (int i = 0; i < e; ++i) pk *= p;
    Block blk;
    blk.pk = pk;
    blk.gens = block_generators(p, e, pk);
    // enumerate the block group by odometer over generator exponents
    std::vector<long long> idx(blk.gens.size(), 0);
    while (true) {
      long long r = 1 % pk;
      for (size_t i = 0; i < blk.gens.size(); ++i)
        r = (__int128)r * pow_mod(blk.gens[i].value, idx[i], pk) % pk;
      blk.dlog.emplace(r, idx);
      size_t i = blk.gens.size();
      while (i > 0) {
        --i;
        if (++idx[i] < blk.gens[i].order) break;
        idx[i] = 0;
        if (i == 0) {
          i = SIZE_MAX;
          break;
        }
      }
      if (blk.gens.empty() || i == SIZE_MAX) break;
    }
    blocks.push_back(std::move(blk));
  }

  for (const auto& blk : blocks)
    for (const auto& g : blk.gens) grp.gens.push_back(g);

  grp.exponent = 1;
  for (const auto& g : grp.gens)
    grp.exponent = std::lcm(grp.exponent, g.order);

  grp.dlog.assign(static_cast<size_t>(q), {});
  for (long long x = 0; x < q; ++x) {
    if (std::gcd(x, q) != 1) continue;
    std::vector<long long> vec;
    for (const auto& blk : blocks) {
      auto it = blk.dlog.find(x % blk.pk);
      const auto& part = it->second;
      vec.insert(vec.end(), part.begin(), part.end());
    }
    grp.dlog[static_cast<size_t>(x)] = std::move(vec);
  }
  return grp;
}

}  // namespace

// Factory with member access; templated so it can consume the local group
// decomposition type.
struct CharacterBuilder {
  template <class Grp>
  static DirichletCharacter make(const Grp& grp, const std::vector<int>& label);
};

template <class Grp>
DirichletCharacter CharacterBuilder::make(const Grp& grp,
                                          const std::vector<int>& label) {
  if (label.size() != grp.gens.size())
    throw std::domain_error("character label length does not match the "
                            "generator decomposition of (Z/qZ)*");
  for (size_t i = 0; i < label.size(); ++i)
    if (label[i] < 0 || label[i] >= grp.gens[i].order)
      throw std::domain_error("character label entry out of range");

  DirichletCharacter chi;
  chi.q_ = grp.q;
  chi.label_ = label;
  chi.exp_den_ = grp.exponent;

  long long D = grp.exponent;
  chi.exps_.assign(static_cast<size_t>(grp.q), -1);
  chi.values_.assign(static_cast<size_t>(grp.q), cplx{0.0, 0.0});
  // one high-accuracy angle division; all roots of unity from it
  double theta0 = two_pi / static_cast<double>(D);
  for (long long x = 0; x < grp.q; ++x) {
    const auto& dl = grp.dlog[static_cast<size_t>(x)];
    if (std::gcd(x, grp.q) != 1) continue;
    long long t = 0;
    for (size_t i = 0; i < dl.size(); ++i) {
      long long contrib =
          (__int128)label[i] * dl[i] % grp.gens[i].order * (D / grp.gens[i].order) % D;
      t = (t + contrib) % D;
    }
    chi.exps_[static_cast<size_t>(x)] = t;
    chi.values_[static_cast<size_t>(x)] =
        std::polar(1.0, theta0 * static_cast<double>(t));
  }
  if (grp.q == 1) {
    chi.exps_[0] = 0;
    chi.values_[0] = 1.0;
  }

  // order = lcm over generators of order/gcd(exponent, order)
  chi.order_ = 1;
  for (size_t i = 0; i < label.size(); ++i)
    chi.order_ = std::lcm(chi.order_,
                          grp.gens[i].order / std::gcd<long long>(label[i], grp.gens[i].order));

  long long minus_one = grp.q - 1;
  chi.parity_ =
      (grp.q > 2 && chi.exps_[static_cast<size_t>(minus_one)] != 0) ? 1 : 0;

  // conductor: least divisor d of q with chi trivial on units == 1 mod d
  chi.conductor_ = grp.q;
  for (long long d : divisors(grp.q)) {
    bool trivial = true;
    for (long long a = 1 + d; a < grp.q; a += d) {
      if (std::gcd(a, grp.q) != 1) continue;
      if (chi.exps_[static_cast<size_t>(a)] != 0) {
        trivial = false;
        break;
      }
    }
    if (trivial) {
      chi.conductor_ = d;
      break;
    }
  }
  return chi;
}

DirichletCharacter DirichletCharacter::conjugate() const {
  DirichletCharacter bar(*this);
  long long D = exp_den_;
  for (size_t r = 0; r < values_.size(); ++r) {
    if (exps_[r] < 0) continue;
    bar.exps_[r] = (D - exps_[r]) % D;
    bar.values_[r] = std::conj(values_[r]);
  }
  // label entries invert per generator
  // (recover generator orders from modulus)
  auto grp = build_group(q_);
  for (size_t i = 0; i < bar.label_.size(); ++i)
    bar.label_[i] = static_cast<int>((grp.gens[i].order - label_[i]) %
                                     grp.gens[i].order);
  return bar;
}

long long DirichletCharacter::value_exponent(long long r) const {
  long long x = r % q_;
  if (x < 0) x += q_;
  return exps_[static_cast<size_t>(x)];
}

std::string DirichletCharacter::label_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < label_.size(); ++i) {
    if (i) os << ',';
    os << label_[i];
  }
  return os.str();
}

std::vector<DirichletCharacter> enumerate_characters(long long q) {
  if (q < 2) throw std::domain_error("modulus must be >= 2");
  auto grp = build_group(q);
  std::vector<DirichletCharacter> out;
  std::vector<int> label(grp.gens.size(), 0);
  while (true) {
    out.push_back(CharacterBuilder::make(grp, label));
    size_t i = label.size();
    bool done = label.empty();
    while (i > 0) {
      --i;
      if (++label[i] < grp.gens[i].order) break;
      label[i] = 0;
      if (i == 0) done = true;
    }
    if (done) break;
  }
  return out;
}

DirichletCharacter character_from_label(long long q,
                                        const std::vector<int>& label) {
  if (q < 2) throw std::domain_error("modulus must be >= 2");
  return CharacterBuilder::make(build_group(q), label);
}

bool is_primitive(const DirichletCharacter& chi) { return chi.primitive(); }

GaussSumResult gauss_sum(const DirichletCharacter& chi) {
  long long q = chi.modulus();
  KahanSumC acc;
  for (long long a = 1; a < q; ++a) {
    cplx v = chi(a);
    if (v == cplx{0.0, 0.0}) continue;
    acc.add(v * std::polar(1.0, two_pi * static_cast<double>(a) /
                                    static_cast<double>(q)));
  }
  GaussSumResult res;
  res.value = acc.value();
  res.magnitude = std::abs(res.value);
  cplx ik = std::polar(1.0, std::numbers::pi / 2.0 * chi.parity());
  res.epsilon_factor = res.value / (ik * std::sqrt(static_cast<double>(q)));
  return res;
}

double partial_sum_max(const DirichletCharacter& chi) {
  if (chi.principal())
    throw std::domain_error(
        "partial_sum_max: principal character has linearly growing sums");
  KahanSumC acc;
  double best = 0.0;
  for (long long x = 1; x <= chi.modulus(); ++x) {
    acc.add(chi(x));
    best = std::max(best, std::abs(acc.value()));
  }
  return best;
}

cplx hyperbola_sum(const DirichletCharacter& chi1,
                   const DirichletCharacter& chi2, double tau, double xi) {
  if (chi1.modulus() != chi2.modulus())
    throw std::domain_error("hyperbola_sum: mismatched moduli");
  if (chi1.principal() || chi2.principal())
    throw std::domain_error("hyperbola_sum: characters must be nonprincipal");
  if (tau < xi) throw std::domain_error("hyperbola_sum: requires tau >= xi");

  long long q = chi2.modulus();
  // partial sums of chi2 over one period; full periods cancel
  std::vector<cplx> prefix(static_cast<size_t>(q), cplx{0.0, 0.0});
  {
    KahanSumC acc;
    for (long long r = 1; r < q; ++r) {
      acc.add(chi2(r));
      prefix[static_cast<size_t>(r)] = acc.value();
    }
  }
  auto s2 = [&](long long x) -> cplx {
    if (x <= 0) return {0.0, 0.0};
    return prefix[static_cast<size_t>(x % q)];
  };

  KahanSumC acc;
  long long mmax = static_cast<long long>(std::floor(xi));
  for (long long m = 1; m <= mmax; ++m) {
    cplx c1 = chi1(m);
    if (c1 == cplx{0.0, 0.0}) continue;
    acc.add(c1 * s2(static_cast<long long>(std::floor(tau / m))));
  }
  return acc.value();
}

long long primitive_character_count(long long q) {
  long long total = 0;
  for (long long d : divisors(q)) total += moebius(q / d) * euler_phi(d);
  return total;
}

std::vector<int> parse_label(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

}  // namespace dell
