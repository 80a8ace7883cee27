#ifndef EVENSPIN_SEGRE_HPP
#define EVENSPIN_SEGRE_HPP

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "evenspin/exactmath/rational.hpp"
#include "evenspin/exactmath/series.hpp"
#include "evenspin/permgrp.hpp"

// The Segre cubic s1 = s3 = 0 in P^5 with coordinates t0..t5. Coordinate t_i
// corresponds to permutation label i + 1 throughout.
namespace evenspin::segre {

constexpr std::size_t kVariables = 6;
constexpr std::size_t kDefaultTruncation = 12;
// Degrees up to which the Molien count is cross-checked by linear algebra.
constexpr std::size_t kCrossCheckMaxDegree = 6;

using Exponent = std::array<int, kVariables>;
using Point = std::array<Rational, kVariables>;

/// Sparse polynomial in t0..t5 over the rationals.
class MultiPoly {
 public:
  MultiPoly() = default;
  static MultiPoly constant(const Rational& c);
  static MultiPoly variable(std::size_t i);
  static MultiPoly monomial(const Exponent& e, const Rational& c = 1);

  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  Rational coefficient(const Exponent& e) const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly operator*(const MultiPoly& rhs) const;
  MultiPoly scaled(const Rational& c) const;
  MultiPoly pow(int k) const;
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  Rational evaluate(const Point& t) const;
  MultiPoly partial(std::size_t i) const;
  /// Replaces t_i by images[i].
  MultiPoly substitute(const std::array<MultiPoly, kVariables>& images) const;
  /// Replaces t_i by t_{sigma(i)} (in label terms, label l by sigma(l)).
  MultiPoly permuted(const Permutation& sigma) const;

  std::string str() const;

 private:
  void add_term(const Exponent& e, const Rational& c);
  std::map<Exponent, Rational> terms_;
};

/// s_k = sum t_i^k, k >= 1.
MultiPoly power_sum(int k);

/// Projective point scaled so that its first nonzero coordinate is 1.
class ProjPoint {
 public:
  static ProjPoint make(const Point& coords);
  const Point& coords() const { return coords_; }
  /// "[+,+,+,-,-,-]" for sign vectors; otherwise "(c0 : ... : c5)".
  std::string str() const;
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend auto operator<=>(const ProjPoint& a, const ProjPoint& b) { return a.coords_ <=> b.coords_; }

 private:
  explicit ProjPoint(Point coords) : coords_(std::move(coords)) {}
  Point coords_;
};

/// Plane t_i + t_j = t_k + t_l = t_m + t_n = 0 for a perfect matching of
/// the coordinate indices 0..5.
class PlaneInCubic {
 public:
  static PlaneInCubic make(std::array<std::pair<int, int>, 3> pairs);
  const std::array<std::pair<int, int>, 3>& pairs() const { return pairs_; }
  /// The matching as labels 1..6 in the permgrp pairing encoding.
  ActedObject as_pairing() const;
  static PlaneInCubic from_pairing(const ActedObject& pairing);
  /// True iff s1 and s3 vanish identically after t_j = -t_i on each pair.
  bool lies_on_cubic() const;
  /// "(t0+t3, t1+t4, t2+t5)"
  std::string str() const;
  friend auto operator<=>(const PlaneInCubic&, const PlaneInCubic&) = default;

 private:
  explicit PlaneInCubic(std::array<std::pair<int, int>, 3> pairs) : pairs_(pairs) {}
  std::array<std::pair<int, int>, 3> pairs_;
};

/// All 15 planes, each verified on the cubic (VerificationFailure otherwise).
std::vector<PlaneInCubic> enumerate_planes();

bool on_cubic(const Point& t);
/// Rank of the 2x6 Jacobian of (s1, s3) at t.
std::size_t jacobian_rank(const Point& t);

/// The 10 sign vectors with three +1 entries modulo negation, each verified
/// to be a singular point of the cubic.
std::vector<ProjPoint> enumerate_nodes();

/// Labels (1..6) of the positive coordinates of a node, as a 3-subset class
/// modulo complement; inverse of node_from_subset_class.
ActedObject node_to_subset_class(const ProjPoint& node);
ProjPoint node_from_subset_class(const ActedObject& subset_class);

/// Orbits of the split-triples group on the planes: sizes 6 and 9.
std::vector<std::vector<PlaneInCubic>> plane_orbits();
/// Orbits on the nodes: sizes 1 and 9, the fixed node (1,1,1,-1,-1,-1).
std::vector<std::vector<ProjPoint>> node_orbits();

/// Molien series of g acting on k[t0..t5] by permuting coordinates.
TruncatedSeries molien_series(const PermGroup& g, std::size_t truncation = kDefaultTruncation);
/// Dimension of degree-d invariants of g on k[t0..t5].
long molien_coefficient(const PermGroup& g, std::size_t degree,
                        std::size_t truncation = kDefaultTruncation);

/// Degree-d G-invariants of k[t]/(s1, s3) from Molien(G) * (1-q)(1-q^3).
long quotient_dimension_molien(std::size_t degree, std::size_t truncation = kDefaultTruncation);
/// Same dimension by Reynolds-averaging all degree-d monomials and taking
/// the rank modulo the degree-d part of (s1, s3).
long quotient_dimension_reynolds(std::size_t degree);

/// Molien value, cross-checked against the Reynolds rank for degrees up to
/// kCrossCheckMaxDegree (VerificationFailure on mismatch).
long quotient_invariant_dimension(std::size_t degree, std::size_t truncation = kDefaultTruncation);

/// All exponent vectors of total degree d, in decreasing lexicographic order.
std::vector<Exponent> monomials_of_degree(std::size_t degree);

}  // namespace evenspin::segre

#endif  // EVENSPIN_SEGRE_HPP
