#ifndef EVENSPIN_MZERON_HPP
#define EVENSPIN_MZERON_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "evenspin/exactmath/rational.hpp"
#include "evenspin/permgrp.hpp"

// Divisor classes on the moduli space of stable n-pointed rational curves,
// tested against F-curves.
namespace evenspin::mzeron {

constexpr int kMinMarkedPoints = 4;
constexpr int kMaxMarkedPoints = 9;

/// Boundary divisor D_S = D_{S^c}, stored by the member of {S, S^c} that
/// contains label 1. Requires 2 <= |S| <= n - 2.
class BoundaryClass {
 public:
  static BoundaryClass make(int n, const std::vector<int>& subset);

  int marked_points() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  std::vector<int> labels() const;
  BoundaryClass permuted(const Permutation& sigma) const;

  /// "D{1,2,3}"
  std::string str() const;

  /// Ordered by subset size, then lexicographically by labels.
  friend std::strong_ordering operator<=>(const BoundaryClass& a, const BoundaryClass& b);
  friend bool operator==(const BoundaryClass&, const BoundaryClass&) = default;

 private:
  BoundaryClass(int n, std::uint32_t mask) : n_(n), mask_(mask) {}
  int n_;
  std::uint32_t mask_;
};

/// Numerical class of an F-curve: a partition of {1..n} into four nonempty
/// blocks, blocks ordered by least element.
class FCurve {
 public:
  static FCurve make(int n, const std::vector<std::vector<int>>& blocks);

  int marked_points() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::uint32_t block_mask(std::size_t i) const { return masks_.at(i); }
  FCurve permuted(const Permutation& sigma) const;

  /// "F{1|2|3|4,5,6}"
  std::string str() const;

  /// Lexicographic on the block label lists.
  friend auto operator<=>(const FCurve& a, const FCurve& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.blocks_ <=> b.blocks_;
  }
  friend bool operator==(const FCurve& a, const FCurve& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }

 private:
  FCurve(int n, std::vector<std::vector<int>> blocks);
  int n_;
  std::vector<std::vector<int>> blocks_;
  std::vector<std::uint32_t> masks_;
};

/// Sparse rational combination of boundary classes; zero coefficients are
/// never stored.
class DivisorClass {
 public:
  explicit DivisorClass(int n);
  static DivisorClass of(const BoundaryClass& d, const Rational& coefficient = 1);

  int marked_points() const { return n_; }
  const std::map<BoundaryClass, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const BoundaryClass& d) const;

  void add(const BoundaryClass& d, const Rational& coefficient);
  DivisorClass& operator+=(const DivisorClass& rhs);
  DivisorClass scaled(const Rational& factor) const;
  DivisorClass permuted(const Permutation& sigma) const;
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

  /// "1*D{1,2} + -1*D{1,2,3}", terms in BoundaryClass order; "0" when empty.
  std::string str() const;

 private:
  int n_;
  std::map<BoundaryClass, Rational> terms_;
};

std::vector<BoundaryClass> enumerate_boundaries(int n);

/// All set partitions of {1..n} into exactly four blocks, sorted.
const std::vector<FCurve>& enumerate_fcurves(int n);

/// -1 if S or S^c is a block of f, +1 if S or S^c is the union of exactly two
/// blocks, 0 otherwise.
int intersect(const BoundaryClass& d, const FCurve& f);
Rational intersect(const DivisorClass& d, const FCurve& f);

/// Sum with coefficient 1 of the distinct boundary classes in the orbit of seed.
DivisorClass orbit_sum(const PermGroup& g, const BoundaryClass& seed);

struct FNefResult {
  bool holds = false;
  /// Least F-curve (in canonical order) violating the condition, if any.
  std::optional<FCurve> certificate;
};

/// Nonnegative against every F-curve. For n <= 7 this is nefness.
FNefResult is_fnef(const DivisorClass& d);
/// Strictly positive against every F-curve.
FNefResult is_fample(const DivisorClass& d);

}  // namespace evenspin::mzeron

#endif  // EVENSPIN_MZERON_HPP
