#ifndef EVENSPIN_THETA_HPP
#define EVENSPIN_THETA_HPP

#include <array>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "evenspin/permgrp.hpp"

// Theta characteristics of genus-2 curves in terms of Weierstrass labels
// 1..6, and the genus-1 counts used for fibres over boundary divisors.
namespace evenspin::theta {

/// Even theta characteristic p_a + p_b - p_c, identified with the 3-subset
/// {a,b,c} modulo complement. Stored by the member containing label 1.
class EvenTheta {
 public:
  static EvenTheta make(std::array<int, 3> labels);

  const std::array<int, 3>& rep() const { return rep_; }
  std::array<int, 3> complement() const;
  EvenTheta permuted(const Permutation& sigma) const;

  /// "{1,2,3}|{4,5,6}"
  std::string str() const;

  friend auto operator<=>(const EvenTheta&, const EvenTheta&) = default;

 private:
  explicit EvenTheta(std::array<int, 3> rep) : rep_(rep) {}
  std::array<int, 3> rep_;
};

/// Odd theta characteristic, one per Weierstrass point.
struct OddTheta {
  int label;
  friend auto operator<=>(const OddTheta&, const OddTheta&) = default;
};

struct Genus1ThetaCount {
  int total = 4;
  int even = 3;
  int odd = 1;
};
inline constexpr Genus1ThetaCount kGenus1Thetas{};
static_assert(kGenus1Thetas.total == kGenus1Thetas.even + kGenus1Thetas.odd);

std::vector<EvenTheta> enumerate_even();
std::vector<OddTheta> enumerate_odd();

/// Classes fixed by an involution of {1..6}. Throws InvalidInput unless
/// rho * rho is the identity.
std::vector<EvenTheta> bielliptic_fixed(const Permutation& rho);

/// Classes moved by rho, grouped into swapped pairs (first < second).
std::vector<std::pair<EvenTheta, EvenTheta>> bielliptic_swapped(const Permutation& rho);

/// The bielliptic involution x_i <-> x_i' under the labelling
/// (x1, x2, x3, x1', x2', x3') -> (1, 2, 3, 4, 5, 6).
Permutation bielliptic_involution();

/// Weierstrass-point expression x_a + x_b - x_c with primed points as 4..6.
struct ThetaExpression {
  std::string text;  // e.g. "x1+x2'-x3"
  EvenTheta theta;
};

/// The four invariant classes written as x1+x2-x3, x1+x2-x3', x1+x2'-x3,
/// x1'+x2-x3.
std::vector<ThetaExpression> bielliptic_invariant_expressions();

/// The expressions x_i + x_i' - x_j for i != j in {1,2,3}.
std::vector<ThetaExpression> bielliptic_moved_expressions();

/// (rep, complement) with rep containing label 1.
std::pair<std::array<int, 3>, std::array<int, 3>> even_theta_to_partition(const EvenTheta& t);

struct PairCounts {
  int even_even;
  int odd_odd;
  int same_parity;
};

/// Pairs of theta characteristics of equal parity on two elliptic curves.
/// Throws VerificationFailure unless the total is the number of even genus-2
/// classes.
PairCounts genus1_pair_counts();

}  // namespace evenspin::theta

#endif  // EVENSPIN_THETA_HPP
