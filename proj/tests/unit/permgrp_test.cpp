#include <doctest.h>

#include <algorithm>
#include <set>

#include "evenspin/errors.hpp"
#include "evenspin/permgrp.hpp"
#include "oracles.hpp"

using namespace evenspin;

TEST_SUITE("permgrp") {
  TEST_CASE("cycle notation round trip") {
    const auto tau = Permutation::parse(6, "(1 4)(2 5)(3 6)");
    CHECK(tau.str() == "(1 4)(2 5)(3 6)");
    CHECK(tau(1) == 4);
    CHECK(tau(6) == 3);
    CHECK(tau.is_involution());
    CHECK(tau.cycle_type() == std::vector<int>{2, 2, 2});
    CHECK(Permutation::identity(6).str() == "()");
    CHECK(Permutation::parse(6, "()").is_identity());
    CHECK(Permutation::parse(6, "(1 2 3)").cycle_type() == std::vector<int>{3, 1, 1, 1});
  }

  TEST_CASE("composition applies the right factor first") {
    const auto a = Permutation::parse(3, "(1 2)");
    const auto b = Permutation::parse(3, "(2 3)");
    CHECK((a * b)(2) == 3);
    CHECK((a * b)(3) == 1);
    CHECK((a * b)(1) == 2);
    CHECK((a * a.inverse()).is_identity());
  }

  TEST_CASE("malformed permutations are rejected") {
    CHECK_THROWS_AS(Permutation::from_images({1, 1, 2}), InvalidInput);
    CHECK_THROWS_AS(Permutation::from_images({0, 1}), InvalidInput);
    CHECK_THROWS_AS(Permutation::parse(6, "(1 7)"), InvalidInput);
    CHECK_THROWS_AS(Permutation::parse(6, "(1 2 1)"), InvalidInput);
    CHECK_THROWS_AS(Permutation::parse(6, "(1 2"), InvalidInput);
    CHECK_THROWS_AS(Permutation::parse(6, "1 2"), InvalidInput);
    CHECK_THROWS_AS(Permutation::identity(3)(4), InvalidInput);
  }

  TEST_CASE("group orders") {
    CHECK(PermGroup::generate(6, {}).order() == 1);
    CHECK(symmetric_group(6).order() == 720);
    CHECK(split_triples_group().order() == 72);
    CHECK(trivial_group(4).order() == 1);
    CHECK_THROWS_AS(PermGroup::generate(6, {Permutation::identity(5)}), InvalidInput);
  }

  TEST_CASE("split-triples group matches the partition-preserving permutations") {
    const auto g = split_triples_group();
    std::set<Permutation> expected;
    for (const auto& p : oracle::split_triples_elements()) expected.insert(oracle::to_permutation(p));
    CHECK(std::set<Permutation>(g.elements().begin(), g.elements().end()) == expected);
    CHECK(std::is_sorted(g.elements().begin(), g.elements().end()));
  }

  TEST_CASE("orbits of pairs under G") {
    const auto g = split_triples_group();
    const auto inner = g.orbit({1, 2}, Action::Subset);
    CHECK(inner.size() == 6);
    for (const auto& s : inner) CHECK(((s[0] <= 3) == (s[1] <= 3)));
    const auto mixed = g.orbit({1, 4}, Action::Subset);
    CHECK(mixed.size() == 9);
    for (const auto& s : mixed) CHECK(((s[0] <= 3) != (s[1] <= 3)));
  }

  TEST_CASE("orbit of the mixed pairing has six members") {
    const auto g = split_triples_group();
    const auto orbit = g.orbit({1, 4, 2, 5, 3, 6}, Action::Pairing);
    CHECK(orbit.size() == 6);
  }

  TEST_CASE("stabilizers") {
    CHECK(symmetric_group(6).stabilizer({1, 2, 3}, Action::SubsetModComplement).order() == 72);
    CHECK(trivial_group(6).stabilizer({1, 2}, Action::Subset).order() == 1);
    CHECK(split_triples_group().stabilizer({1, 1, 1, -1, -1, -1}, Action::SignVectorModNegation).order() ==
          72);
  }

  TEST_CASE("orbit partitions") {
    const auto g = split_triples_group();
    std::vector<ActedObject> pairs;
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j) pairs.push_back({i, j});
    const auto parts = g.orbit_partition(pairs, Action::Subset);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].size() == 6);
    CHECK(parts[1].size() == 9);
    CHECK(symmetric_group(6).orbit_partition(pairs, Action::Subset).size() == 1);

    std::vector<ActedObject> triples;
    for (int i = 2; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j) triples.push_back({1, i, j});
    const auto tparts = g.orbit_partition(triples, Action::SubsetModComplement);
    REQUIRE(tparts.size() == 2);
    CHECK(tparts[0].size() == 1);
    CHECK(tparts[1].size() == 9);

    pairs.pop_back();
    CHECK_THROWS_AS(g.orbit_partition(pairs, Action::Subset), InvalidInput);
  }

  TEST_CASE("canonical objects and validation") {
    CHECK(canonical_object(Action::SubsetModComplement, 6, {4, 5, 6}) == ActedObject{1, 2, 3});
    CHECK(canonical_object(Action::Subset, 6, {3, 1}) == ActedObject{1, 3});
    CHECK(canonical_object(Action::Pairing, 6, {5, 2, 4, 1, 6, 3}) == ActedObject{1, 4, 2, 5, 3, 6});
    CHECK(canonical_object(Action::SignVectorModNegation, 6, {-1, -1, -1, 1, 1, 1}) ==
          ActedObject{1, 1, 1, -1, -1, -1});
    CHECK_THROWS_AS(canonical_object(Action::Subset, 6, {1, 1}), InvalidInput);
    CHECK_THROWS_AS(canonical_object(Action::Subset, 6, {7}), InvalidInput);
    CHECK_THROWS_AS(canonical_object(Action::Pairing, 6, {1, 2, 3}), InvalidInput);
    CHECK_THROWS_AS(canonical_object(Action::SignVectorModNegation, 6, {1, 0, 1, 1, 1, 1}), InvalidInput);
    CHECK_THROWS_AS(split_triples_group().orbit({1, 2, 3}, Action::Pairing), InvalidInput);
  }

  TEST_CASE("action names") {
    for (auto a : {Action::Subset, Action::SubsetModComplement, Action::Pairing,
                   Action::SignVectorModNegation})
      CHECK(parse_action(action_name(a)) == a);
    CHECK(action_name(Action::SignVectorModNegation) == "sign-vector-mod-negation");
    CHECK_THROWS_AS(parse_action("rotation"), InvalidInput);
  }
}
