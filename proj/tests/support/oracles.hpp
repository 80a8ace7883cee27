// Brute-force reference computations used as independent checks. Nothing here
// calls into the library except for the Rational scalar type.
#ifndef EVENSPIN_TESTS_ORACLES_HPP
#define EVENSPIN_TESTS_ORACLES_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "evenspin/exactmath/rational.hpp"
#include "evenspin/permgrp.hpp"

namespace oracle {

using evenspin::Rational;
using Mask = std::uint32_t;
using Perm6 = std::array<int, 6>;  // entry i is the image of label i + 1

inline Mask bit(int label) { return Mask{1} << label; }

// The library packs label l into bit l - 1; this oracle uses bit l.
inline Mask from_library_mask(Mask m) { return m << 1; }

inline Mask full_mask(int n) {
  Mask m = 0;
  for (int i = 1; i <= n; ++i) m |= bit(i);
  return m;
}

inline long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline long stirling2(int n, int k) {
  if (n == 0 && k == 0) return 1;
  if (n == 0 || k == 0) return 0;
  return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}

// Every partition of {1..n} into exactly four blocks, each block a mask.
// Blocks are listed by least element.
inline std::vector<std::vector<Mask>> four_block_partitions(int n) {
  std::set<std::vector<Mask>> seen;
  long total = 1;
  for (int i = 0; i < n; ++i) total *= 4;
  for (long code = 0; code < total; ++code) {
    long c = code;
    std::array<Mask, 4> blocks{};
    for (int i = 0; i < n; ++i) {
      blocks[c % 4] |= bit(i + 1);
      c /= 4;
    }
    if (std::find(blocks.begin(), blocks.end(), Mask{0}) != blocks.end()) continue;
    std::vector<Mask> sorted(blocks.begin(), blocks.end());
    std::sort(sorted.begin(), sorted.end(),
              [](Mask a, Mask b) { return (a & -a) < (b & -b); });
    seen.insert(sorted);
  }
  return {seen.begin(), seen.end()};
}

// -1 if S or its complement is a block, +1 if either is a union of two blocks.
inline int pairing(Mask s, const std::vector<Mask>& blocks, int n) {
  const Mask t = full_mask(n) & ~s;
  for (Mask b : blocks)
    if (b == s || b == t) return -1;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      if ((blocks[i] | blocks[j]) == s || (blocks[i] | blocks[j]) == t) return 1;
  return 0;
}

inline Mask canonical_boundary(Mask s, int n) { return (s & bit(1)) ? s : (full_mask(n) & ~s); }

inline std::vector<Perm6> all_perms6() {
  std::vector<Perm6> out;
  Perm6 p{1, 2, 3, 4, 5, 6};
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Permutations preserving the unordered partition {1,2,3} | {4,5,6}.
inline bool preserves_triples(const Perm6& p) {
  const bool low = p[0] <= 3;
  for (int i = 0; i < 3; ++i)
    if ((p[i] <= 3) != low || (p[i + 3] <= 3) == low) return false;
  return true;
}

inline std::vector<Perm6> split_triples_elements() {
  std::vector<Perm6> out;
  for (const auto& p : all_perms6())
    if (preserves_triples(p)) out.push_back(p);
  return out;
}

inline Mask apply(const Perm6& p, Mask s) {
  Mask out = 0;
  for (int i = 1; i <= 6; ++i)
    if (s & bit(i)) out |= bit(p[i - 1]);
  return out;
}

inline evenspin::Permutation to_permutation(const Perm6& p) {
  return evenspin::Permutation::from_images({p.begin(), p.end()});
}

// Boundary classes of the four lifted spin divisors, as coefficient maps on
// canonical masks: orbits of {1,2}, {1,4}, {1,2,4} and the single {1,2,3}.
inline std::array<std::map<Mask, long>, 4> lifted_basis() {
  const auto g = split_triples_elements();
  const Mask seeds[3] = {bit(1) | bit(2), bit(1) | bit(4), bit(1) | bit(2) | bit(4)};
  std::array<std::map<Mask, long>, 4> out;
  for (int k = 0; k < 3; ++k)
    for (const auto& p : g) out[k][canonical_boundary(apply(p, seeds[k]), 6)] = 1;
  out[3][bit(1) | bit(2) | bit(3)] = 1;
  return out;
}

// Pairing of a*A0 + b*B0 + c*A1 + d*B1 with every four-block partition of {1..6}.
inline std::vector<Rational> spin_pairings(const std::array<Rational, 4>& coeffs) {
  static const auto basis = lifted_basis();
  static const auto curves = four_block_partitions(6);
  std::vector<Rational> out;
  for (const auto& f : curves) {
    Rational total;
    for (int k = 0; k < 4; ++k) {
      long sum = 0;
      for (const auto& [mask, c] : basis[k]) sum += c * pairing(mask, f, 6);
      total += coeffs[k] * Rational(sum);
    }
    out.push_back(total);
  }
  return out;
}

inline bool spin_nef(const std::array<Rational, 4>& coeffs) {
  for (const auto& x : spin_pairings(coeffs))
    if (x.sign() < 0) return false;
  return true;
}

inline bool spin_ample(const std::array<Rational, 4>& coeffs) {
  for (const auto& x : spin_pairings(coeffs))
    if (x.sign() <= 0) return false;
  return true;
}

// Log canonical divisor written out coefficient by coefficient.
inline std::array<Rational, 4> log_canonical_closed_form(const Rational& e) {
  return {e - Rational(8, 5), e - Rational(11, 5), e / Rational(2) - Rational(3, 10),
          e / Rational(2) - Rational(3, 10)};
}

// Number of G-orbits on degree-d monomials in six variables, which equals the
// dimension of degree-d invariants for a permutation action.
inline long monomial_orbit_count(const std::vector<Perm6>& group, int d) {
  std::set<std::array<int, 6>> seen;
  long orbits = 0;
  std::array<int, 6> e{};
  auto visit = [&](const std::array<int, 6>& m) {
    if (seen.count(m)) return;
    ++orbits;
    for (const auto& p : group) {
      std::array<int, 6> img{};
      for (int i = 0; i < 6; ++i) img[p[i] - 1] = m[i];
      seen.insert(img);
    }
  };
  // Odometer over exponent vectors with total degree d.
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == 5) {
      e[5] = left;
      visit(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[pos] = k;
      rec(pos + 1, left - k);
    }
  };
  rec(0, d);
  return orbits;
}

// Hilbert function of the invariant quotient by two invariant forms of degrees 1 and 3.
inline long quotient_dimension(const std::vector<Perm6>& group, int d) {
  auto inv = [&](int k) { return k < 0 ? 0L : monomial_orbit_count(group, k); };
  return inv(d) - inv(d - 1) - inv(d - 3) + inv(d - 4);
}

// Hand-rolled generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int max_num = 12, int max_den = 6) {
    return Rational(uniform(-max_num, max_num), uniform(1, max_den));
  }

  std::array<Rational, 4> spin_coords() { return {rational(), rational(), rational(), rational()}; }

  std::vector<int> shuffled_labels(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng_);
    return v;
  }

  evenspin::Permutation permutation(int n) {
    return evenspin::Permutation::from_images(shuffled_labels(n));
  }

  // Random subset of {1..n} with size in [lo, hi].
  std::vector<int> subset(int n, int lo, int hi) {
    auto v = shuffled_labels(n);
    v.resize(uniform(lo, hi));
    std::sort(v.begin(), v.end());
    return v;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle

#endif  // EVENSPIN_TESTS_ORACLES_HPP
