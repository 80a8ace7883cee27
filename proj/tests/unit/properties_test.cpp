// Randomized invariants. Every generator is seeded so failures reproduce.
#include <doctest.h>

#include <set>

#include "evenspin/exactmath.hpp"
#include "evenspin/mzeron.hpp"
#include "evenspin/segre.hpp"
#include "evenspin/spincone.hpp"
#include "evenspin/theta.hpp"
#include "oracles.hpp"

using namespace evenspin;

namespace {

constexpr std::uint64_t kSeed = 0x5eed;

spincone::SpinClass as_class(const std::array<Rational, 4>& c) { return {c[0], c[1], c[2], c[3]}; }

ActedObject random_object(oracle::Gen& gen, Action action) {
  switch (action) {
    case Action::Subset:
      return gen.subset(6, 0, 6);
    case Action::SubsetModComplement:
      return gen.subset(6, 3, 3);
    case Action::Pairing: {
      const auto v = gen.shuffled_labels(6);
      return canonical_object(action, 6, v);
    }
    case Action::SignVectorModNegation: {
      ActedObject v(6);
      for (auto& x : v) x = gen.uniform(0, 1) ? 1 : -1;
      return canonical_object(action, 6, v);
    }
  }
  return {};
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("rank plus nullity equals column count") {
    oracle::Gen gen(kSeed);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t rows = gen.uniform(1, 5);
      const std::size_t cols = gen.uniform(1, 6);
      RationalMatrix m(rows, cols);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = gen.uniform(0, 2) ? Rational(0) : gen.rational(3, 3);
      const auto kernel = m.kernel_basis();
      REQUIRE(m.rank() + kernel.size() == cols);
      for (const auto& v : kernel) {
        for (const auto& x : m * v) REQUIRE(x.is_zero());
        REQUIRE(v == primitive_integer_vector(v));
      }
    }
  }

  TEST_CASE("rational serialization round trips") {
    oracle::Gen gen(kSeed + 1);
    for (int trial = 0; trial < 500; ++trial) {
      const Rational r = gen.rational(1000, 1000);
      REQUIRE(Rational::parse(r.str()) == r);
      REQUIRE((r * r).sign() >= 0);
      if (!r.is_zero()) REQUIRE(r / r == Rational(1));
    }
  }

  TEST_CASE("series product is commutative and associative") {
    oracle::Gen gen(kSeed + 2);
    auto random_series = [&] {
      std::vector<Rational> c(6);
      for (auto& x : c) x = gen.rational(5, 3);
      return TruncatedSeries(c, 5);
    };
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = random_series(), b = random_series(), c = random_series();
      REQUIRE(a * b == b * a);
      REQUIRE((a * b) * c == a * (b * c));
    }
  }

  TEST_CASE("orbit-stabilizer for random groups and objects") {
    oracle::Gen gen(kSeed + 3);
    std::vector<PermGroup> groups{split_triples_group(), symmetric_group(6), trivial_group(6)};
    for (int k = 0; k < 6; ++k) groups.push_back(PermGroup::generate(6, {gen.permutation(6), gen.permutation(6)}));
    for (const auto& g : groups) {
      REQUIRE(720 % g.order() == 0);
      const auto again = PermGroup::generate(6, g.elements());
      REQUIRE(again.elements() == g.elements());
      for (auto action : {Action::Subset, Action::SubsetModComplement, Action::Pairing,
                          Action::SignVectorModNegation}) {
        for (int trial = 0; trial < 5; ++trial) {
          const auto x = random_object(gen, action);
          REQUIRE(g.orbit(x, action).size() * g.stabilizer(x, action).order() == g.order());
        }
      }
    }
  }

  TEST_CASE("orbits partition the acted-on set") {
    oracle::Gen gen(kSeed + 4);
    for (int k = 0; k < 6; ++k) {
      const auto g = PermGroup::generate(6, {gen.permutation(6)});
      std::vector<ActedObject> pairs;
      for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) pairs.push_back({i, j});
      std::size_t total = 0;
      std::set<ActedObject> seen;
      for (const auto& orbit : g.orbit_partition(pairs, Action::Subset)) {
        total += orbit.size();
        seen.insert(orbit.begin(), orbit.end());
      }
      REQUIRE(total == pairs.size());
      REQUIRE(seen.size() == pairs.size());
    }
  }

  TEST_CASE("intersection is symmetric under relabeling") {
    oracle::Gen gen(kSeed + 5);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = gen.uniform(4, 8);
      const auto sigma = gen.permutation(n);
      const auto& curves = mzeron::enumerate_fcurves(n);
      const auto& f = curves[gen.uniform(0, static_cast<int>(curves.size()) - 1)];
      const auto d = mzeron::BoundaryClass::make(n, gen.subset(n, 2, n - 2));
      const int value = mzeron::intersect(d, f);
      REQUIRE(value >= -1);
      REQUIRE(value <= 1);
      REQUIRE(mzeron::intersect(d.permuted(sigma), f.permuted(sigma)) == value);
    }
  }

  TEST_CASE("lifted classes are G-invariant") {
    const auto g = split_triples_group();
    const spincone::SpinClass basis[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    for (const auto& b : basis) {
      const auto l = spincone::lift(b);
      for (const auto& sigma : g.elements()) REQUIRE(l.permuted(sigma) == l);
    }
  }

  TEST_CASE("nef inequalities agree with the brute-force curve scan") {
    oracle::Gen gen(kSeed + 6);
    for (int trial = 0; trial < 300; ++trial) {
      const auto c = gen.spin_coords();
      const auto s = as_class(c);
      REQUIRE(spincone::is_nef(s).holds == oracle::spin_nef(c));
      REQUIRE(spincone::is_ample(s).holds == oracle::spin_ample(c));
      const auto t = spincone::to_basis3(s);
      REQUIRE(spincone::is_nef(t).holds == oracle::spin_nef(c));
      REQUIRE(spincone::is_ample(t).holds == oracle::spin_ample(c));
    }
  }

  TEST_CASE("nef cone samples near its boundary") {
    // Points of the form nef-extremal + small perturbation exercise equality cases.
    oracle::Gen gen(kSeed + 7);
    const std::array<Rational, 4> edge{Rational(17, 25), Rational(2, 25), Rational(21, 25), Rational(21, 25)};
    for (int trial = 0; trial < 200; ++trial) {
      auto c = edge;
      c[gen.uniform(0, 3)] += Rational(gen.uniform(-1, 1), 100);
      REQUIRE(spincone::is_nef(as_class(c)).holds == oracle::spin_nef(c));
      REQUIRE(spincone::is_ample(as_class(c)).holds == oracle::spin_ample(c));
    }
  }

  TEST_CASE("class equivalence is invisible to the basis and to curve pairings") {
    oracle::Gen gen(kSeed + 8);
    const auto rel = spincone::picard_relation();
    for (int trial = 0; trial < 100; ++trial) {
      const auto c = gen.spin_coords();
      const auto s = as_class(c);
      const auto shifted = s + rel.scaled(gen.rational());
      REQUIRE(spincone::equivalent(s, shifted));
      REQUIRE(spincone::to_basis3(s) == spincone::to_basis3(shifted));
      REQUIRE(spincone::equivalent(spincone::from_basis3(spincone::to_basis3(s)), s));
      const auto a = oracle::spin_pairings(c);
      const auto b = oracle::spin_pairings(shifted.coords());
      REQUIRE(a == b);
    }
  }

  TEST_CASE("threshold duality for the log canonical divisor") {
    oracle::Gen gen(kSeed + 9);
    const Rational t = spincone::nef_threshold_spin();
    std::vector<Rational> eps{t, t + Rational(1, 1000), t - Rational(1, 1000), Rational(9, 5), Rational(0)};
    for (int trial = 0; trial < 60; ++trial) eps.push_back(gen.rational(30, 10));
    for (const auto& e : eps) {
      CAPTURE(e.str());
      const auto f = spincone::log_canonical_divisor(e);
      REQUIRE(f.coords() == oracle::log_canonical_closed_form(e));
      REQUIRE(spincone::is_nef(f).holds == (e >= t));
      REQUIRE(spincone::is_ample(f).holds == (e > t));
      REQUIRE(oracle::spin_nef(f.coords()) == (e >= t));
    }
  }

  TEST_CASE("invariant-model sign and regime monotonicity") {
    oracle::Gen gen(kSeed + 10);
    std::vector<Rational> eps{Rational(49, 25), Rational(57, 25)};
    for (int trial = 0; trial < 100; ++trial) eps.push_back(gen.rational(40, 12));
    std::sort(eps.begin(), eps.end());
    for (std::size_t i = 0; i < eps.size(); ++i) {
      const Rational c = spincone::inv_log_canonical(eps[i]).coeff_a0inv();
      REQUIRE((c.sign() >= 0) == (eps[i] >= Rational(49, 25)));
      REQUIRE(c.is_zero() == (eps[i] == Rational(49, 25)));
      if (i > 0) REQUIRE(static_cast<int>(spincone::classify(eps[i - 1])) <=
                         static_cast<int>(spincone::classify(eps[i])));
    }
  }

  TEST_CASE("node bijection is G-equivariant") {
    const auto g = split_triples_group();
    for (const auto& node : segre::enumerate_nodes()) {
      const auto s = segre::node_to_subset_class(node);
      for (const auto& sigma : g.elements()) {
        const auto moved = act(Action::SignVectorModNegation, sigma,
                               canonical_object(Action::SignVectorModNegation, 6, [&] {
                                 ActedObject v;
                                 for (const auto& x : node.coords()) v.push_back(static_cast<int>(x.to_long()));
                                 return v;
                               }()));
        segre::Point p;
        for (int i = 0; i < 6; ++i) p[i] = Rational(moved[i]);
        REQUIRE(segre::node_to_subset_class(segre::ProjPoint::make(p)) ==
                act(Action::SubsetModComplement, sigma, s));
      }
    }
  }

  TEST_CASE("every involution fixes f classes and swaps (10 - f) / 2 pairs") {
    for (const auto& p : oracle::all_perms6()) {
      const auto rho = oracle::to_permutation(p);
      if (!rho.is_involution()) continue;
      const auto fixed = theta::bielliptic_fixed(rho);
      const auto swapped = theta::bielliptic_swapped(rho);
      REQUIRE(fixed.size() + 2 * swapped.size() == 10);
    }
  }

  TEST_CASE("symmetric group acts transitively on even classes") {
    const auto s6 = symmetric_group(6);
    const auto even = theta::enumerate_even();
    for (const auto& t : even) {
      std::set<theta::EvenTheta> orbit;
      for (const auto& sigma : s6.elements()) orbit.insert(t.permuted(sigma));
      REQUIRE(orbit.size() == even.size());
      const auto& r = t.rep();
      REQUIRE(s6.stabilizer({r.begin(), r.end()}, Action::SubsetModComplement).order() == 72);
    }
  }

  TEST_CASE("trivial-group Molien series counts monomials up to the truncation") {
    const auto series = segre::molien_series(trivial_group(6));
    for (std::size_t d = 0; d <= segre::kDefaultTruncation; ++d)
      REQUIRE(series.coefficient(d) == Rational(oracle::binomial(static_cast<int>(d) + 5, 5)));
  }
}
