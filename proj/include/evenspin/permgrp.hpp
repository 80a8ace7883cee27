#ifndef EVENSPIN_PERMGRP_HPP
#define EVENSPIN_PERMGRP_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evenspin {

/// Bijection of the labels {1..n}. Composition `p * q` applies q first.
class Permutation {
 public:
  static Permutation identity(int degree);
  /// images[i] is the image of label i + 1.
  static Permutation from_images(std::vector<int> images);
  /// Disjoint or not, cycles are composed right to left.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);
  /// Parses cycle notation such as "(1 4)(2 5)(3 6)"; "()" is the identity.
  static Permutation parse(int degree, std::string_view cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int label) const;
  std::span<const int> images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  bool is_involution() const { return ((*this) * (*this)).is_identity(); }

  /// Cycle lengths including fixed points, in decreasing order.
  std::vector<int> cycle_type() const;

  /// Cycle notation without fixed points, "(1 4)(2 5)(3 6)"; identity is "()".
  std::string str() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

// Named actions of a permutation group on combinatorial objects. Objects are
// stored in a canonical integer encoding:
//   Subset                  sorted labels
//   SubsetModComplement     sorted labels of whichever of S, S^c contains 1
//   Pairing                 perfect matching flattened as a1 b1 a2 b2 ...
//                           with a_i < b_i and a_1 < a_2 < ...
//   SignVectorModNegation   n entries in {+1,-1}, first entry +1
enum class Action { Subset, SubsetModComplement, Pairing, SignVectorModNegation };

using ActedObject = std::vector<int>;

std::string_view action_name(Action action);
Action parse_action(std::string_view name);

/// Validates `raw` for the action at the given degree and returns its
/// canonical encoding. For pairings, `raw` may list the pairs in any order.
ActedObject canonical_object(Action action, int degree, ActedObject raw);

/// Image of a canonical object under sigma, canonicalized.
ActedObject act(Action action, const Permutation& sigma, const ActedObject& x);

/// Finite permutation group with every element stored, sorted
/// lexicographically by image sequence. Intended for degree <= 9.
class PermGroup {
 public:
  static PermGroup generate(int degree, std::vector<Permutation> generators);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const Permutation& p) const;

  /// Full orbit of x, sorted.
  std::vector<ActedObject> orbit(const ActedObject& x, Action action) const;
  PermGroup stabilizer(const ActedObject& x, Action action) const;
  /// Orbits of a set closed under the action, each sorted; orbits ordered by
  /// size, then by their least member.
  std::vector<std::vector<ActedObject>> orbit_partition(std::vector<ActedObject> xs,
                                                        Action action) const;

 private:
  PermGroup(int degree, std::vector<Permutation> generators, std::vector<Permutation> elements)
      : degree_(degree), generators_(std::move(generators)), elements_(std::move(elements)) {}

  ActedObject canonical(Action action, const ActedObject& x) const;

  int degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

PermGroup trivial_group(int degree);
PermGroup symmetric_group(int degree);

/// The order-72 subgroup of S6 preserving the split {1,2,3} | {4,5,6}:
/// S3 on {1,2,3}, S3 on {4,5,6}, and the swap (1 4)(2 5)(3 6).
PermGroup split_triples_group();

}  // namespace evenspin

#endif  // EVENSPIN_PERMGRP_HPP
