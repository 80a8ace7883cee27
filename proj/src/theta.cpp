#include "evenspin/theta.hpp"

#include <algorithm>
#include <set>

#include "evenspin/errors.hpp"

namespace evenspin::theta {

namespace {

constexpr int kWeierstrassPoints = 6;

std::string join(const std::array<int, 3>& a) {
  return "{" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) + "}";
}

std::string point_name(int label) {
  return label <= 3 ? "x" + std::to_string(label) : "x" + std::to_string(label - 3) + "'";
}

ThetaExpression expression(int a, int b, int c) {
  return {point_name(a) + "+" + point_name(b) + "-" + point_name(c), EvenTheta::make({a, b, c})};
}

}  // namespace

EvenTheta EvenTheta::make(std::array<int, 3> labels) {
  const ActedObject canon = canonical_object(Action::SubsetModComplement, kWeierstrassPoints,
                                             {labels.begin(), labels.end()});
  if (canon.size() != 3) throw InvalidInput("an even theta characteristic needs 3 distinct labels");
  return EvenTheta({canon[0], canon[1], canon[2]});
}

std::array<int, 3> EvenTheta::complement() const {
  std::array<int, 3> out{};
  std::size_t k = 0;
  for (int l = 1; l <= kWeierstrassPoints; ++l)
    if (std::find(rep_.begin(), rep_.end(), l) == rep_.end()) out[k++] = l;
  return out;
}

EvenTheta EvenTheta::permuted(const Permutation& sigma) const {
  if (sigma.degree() != kWeierstrassPoints) throw InvalidInput("expected a permutation of 1..6");
  return make({sigma(rep_[0]), sigma(rep_[1]), sigma(rep_[2])});
}

std::string EvenTheta::str() const { return join(rep_) + "|" + join(complement()); }

std::vector<EvenTheta> enumerate_even() {
  std::set<EvenTheta> out;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      for (int c = b + 1; c <= 6; ++c) out.insert(EvenTheta::make({a, b, c}));
  return {out.begin(), out.end()};
}

std::vector<OddTheta> enumerate_odd() {
  std::vector<OddTheta> out;
  for (int l = 1; l <= kWeierstrassPoints; ++l) out.push_back({l});
  return out;
}

namespace {

void require_involution(const Permutation& rho) {
  if (rho.degree() != kWeierstrassPoints) throw InvalidInput("expected a permutation of 1..6");
  if (!rho.is_involution()) throw InvalidInput(rho.str() + " is not an involution");
}

}  // namespace

std::vector<EvenTheta> bielliptic_fixed(const Permutation& rho) {
  require_involution(rho);
  std::vector<EvenTheta> out;
  for (const auto& t : enumerate_even())
    if (t.permuted(rho) == t) out.push_back(t);
  return out;
}

std::vector<std::pair<EvenTheta, EvenTheta>> bielliptic_swapped(const Permutation& rho) {
  require_involution(rho);
  std::vector<std::pair<EvenTheta, EvenTheta>> out;
  for (const auto& t : enumerate_even()) {
    const EvenTheta image = t.permuted(rho);
    if (t < image) out.emplace_back(t, image);
  }
  return out;
}

Permutation bielliptic_involution() {
  return Permutation::from_cycles(kWeierstrassPoints, {{1, 4}, {2, 5}, {3, 6}});
}

std::vector<ThetaExpression> bielliptic_invariant_expressions() {
  return {expression(1, 2, 3), expression(1, 2, 6), expression(1, 5, 3), expression(4, 2, 3)};
}

std::vector<ThetaExpression> bielliptic_moved_expressions() {
  std::vector<ThetaExpression> out;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j) out.push_back(expression(i, i + 3, j));
  return out;
}

std::pair<std::array<int, 3>, std::array<int, 3>> even_theta_to_partition(const EvenTheta& t) {
  return {t.rep(), t.complement()};
}

PairCounts genus1_pair_counts() {
  PairCounts counts{kGenus1Thetas.even * kGenus1Thetas.even, kGenus1Thetas.odd * kGenus1Thetas.odd,
                    0};
  counts.same_parity = counts.even_even + counts.odd_odd;
  const auto even_classes = static_cast<int>(enumerate_even().size());
  if (counts.same_parity != even_classes) {
    throw VerificationFailure("same-parity genus-1 pairs (" + std::to_string(counts.same_parity) +
                              ") differ from the " + std::to_string(even_classes) +
                              " even genus-2 classes");
  }
  return counts;
}

}  // namespace evenspin::theta
