#include "evenspin/spincone.hpp"

#include <algorithm>

#include "evenspin/errors.hpp"
#include "evenspin/exactmath/matrix.hpp"
#include "evenspin/permgrp.hpp"
#include "evenspin/theta.hpp"

namespace evenspin::spincone {

namespace {

constexpr int kMarkedPoints = 6;
// The forgetful map is simply ramified along B0 and nowhere else in codimension one.
constexpr int kB0RamificationIndex = 2;

std::string term(const Rational& c, std::string_view name) { return c.str() + "*" + std::string(name); }

// Lifts of A0, B0, A1, B1.
const std::array<mzeron::DivisorClass, 4>& lifted_basis() {
  static const std::array<mzeron::DivisorClass, 4> basis = [] {
    const PermGroup g = split_triples_group();
    auto seed = [](std::vector<int> s) { return mzeron::BoundaryClass::make(kMarkedPoints, s); };
    return std::array<mzeron::DivisorClass, 4>{
        mzeron::orbit_sum(g, seed({1, 2})),
        mzeron::orbit_sum(g, seed({1, 4})),
        mzeron::orbit_sum(g, seed({1, 2, 4})),
        mzeron::orbit_sum(g, seed({1, 2, 3})),
    };
  }();
  return basis;
}

NefCheck check(const std::vector<std::pair<std::string_view, Rational>>& slack, bool strict) {
  for (const auto& [text, value] : slack) {
    if (value.sign() < 0 || (strict && value.is_zero())) {
      return {false, strict ? std::string(text).replace(std::string(text).find(">="), 2, ">")
                            : std::string(text)};
    }
  }
  return {true, {}};
}

std::vector<std::pair<std::string_view, Rational>> slack4(const SpinClass& s) {
  std::vector<std::pair<std::string_view, Rational>> out;
  for (std::size_t i = 0; i < 4; ++i) out.emplace_back(nef_inequality_text()[i], nef_inequality_value(i, s));
  return out;
}

std::vector<std::pair<std::string_view, Rational>> slack3(const SpinClass3& t) {
  // b <= 0, c/3 <= a, -2b <= a, a <= (b + c)/2
  return {
      {"0 >= b", -t.b0},
      {"a >= c/3", t.a0 - t.b1 / Rational(3)},
      {"a >= -2b", t.a0 + Rational(2) * t.b0},
      {"(b + c)/2 >= a", (t.b0 + t.b1) / Rational(2) - t.a0},
  };
}

}  // namespace

SpinClass& SpinClass::operator+=(const SpinClass& rhs) {
  a0 += rhs.a0;
  b0 += rhs.b0;
  a1 += rhs.a1;
  b1 += rhs.b1;
  return *this;
}

SpinClass& SpinClass::operator-=(const SpinClass& rhs) {
  a0 -= rhs.a0;
  b0 -= rhs.b0;
  a1 -= rhs.a1;
  b1 -= rhs.b1;
  return *this;
}

SpinClass SpinClass::scaled(const Rational& factor) const {
  return {a0 * factor, b0 * factor, a1 * factor, b1 * factor};
}

std::string SpinClass::str() const {
  return term(a0, "A0") + " + " + term(b0, "B0") + " + " + term(a1, "A1") + " + " + term(b1, "B1");
}

std::string SpinClass3::str() const {
  return term(a0, "A0") + " + " + term(b0, "B0") + " + " + term(b1, "B1");
}

InvClass InvClass::from_pair(const Rational& a0inv, const Rational& b0inv) {
  return InvClass(a0inv + Rational(3, 2) * b0inv);
}

std::string_view regime_name(EpsilonRegime regime) {
  switch (regime) {
    case EpsilonRegime::FullModel: return "full";
    case EpsilonRegime::InvariantModel: return "invariant";
    case EpsilonRegime::Point: return "point";
    case EpsilonRegime::NotEffective: return "not-effective";
  }
  return "?";
}

mzeron::DivisorClass lift(const SpinClass& s) {
  const auto& basis = lifted_basis();
  const auto coords = s.coords();
  mzeron::DivisorClass out(kMarkedPoints);
  for (std::size_t i = 0; i < 4; ++i) out += basis[i].scaled(coords[i]);
  return out;
}

mzeron::FCurve gamma(int index) {
  switch (index) {
    case 1: return mzeron::FCurve::make(kMarkedPoints, {{1}, {2}, {3}, {4, 5, 6}});
    case 2: return mzeron::FCurve::make(kMarkedPoints, {{1}, {2}, {4}, {3, 5, 6}});
    case 3: return mzeron::FCurve::make(kMarkedPoints, {{1}, {2}, {3, 4}, {5, 6}});
    case 4: return mzeron::FCurve::make(kMarkedPoints, {{1}, {4}, {2, 3}, {5, 6}});
    case 5: return mzeron::FCurve::make(kMarkedPoints, {{1}, {4}, {2, 5}, {3, 6}});
    default: throw InvalidInput("F-curve index must lie in 1..5, got " + std::to_string(index));
  }
}

IntersectionTable intersection_table() {
  IntersectionTable table{};
  const auto& basis = lifted_basis();
  for (std::size_t row = 0; row < 4; ++row) {
    for (int col = 1; col <= 5; ++col) {
      table[row][static_cast<std::size_t>(col - 1)] =
          static_cast<int>(mzeron::intersect(basis[row], gamma(col)).to_long());
    }
  }
  return table;
}

const std::array<std::string_view, 4>& nef_inequality_text() {
  static const std::array<std::string_view, 4> text{"3a >= d", "a + 2b >= c", "2c >= b",
                                                    "b + c + d >= 2a"};
  return text;
}

Rational nef_inequality_value(std::size_t index, const SpinClass& s) {
  switch (index) {
    case 0: return Rational(3) * s.a0 - s.b1;
    case 1: return s.a0 + Rational(2) * s.b0 - s.a1;
    case 2: return Rational(2) * s.a1 - s.b0;
    case 3: return s.b0 + s.a1 + s.b1 - Rational(2) * s.a0;
    default: throw InvalidInput("nef inequality index must lie in 0..3");
  }
}

NefCheck is_nef(const SpinClass& s) { return check(slack4(s), false); }
NefCheck is_ample(const SpinClass& s) { return check(slack4(s), true); }
NefCheck is_nef(const SpinClass3& s) { return check(slack3(s), false); }
NefCheck is_ample(const SpinClass3& s) { return check(slack3(s), true); }

SpinClass picard_relation() {
  const auto& curves = mzeron::enumerate_fcurves(kMarkedPoints);
  const auto& basis = lifted_basis();
  RationalMatrix pairing(curves.size(), 4);
  for (std::size_t r = 0; r < curves.size(); ++r)
    for (std::size_t c = 0; c < 4; ++c) pairing.at(r, c) = mzeron::intersect(basis[c], curves[r]);
  const auto kernel = pairing.kernel_basis();
  if (kernel.size() != 1) {
    throw VerificationFailure("pairing with all F-curves has a kernel of dimension " +
                              std::to_string(kernel.size()) + ", expected 1");
  }
  const auto& v = kernel.front();
  return {v[0], v[1], v[2], v[3]};
}

// Uses A1 = 3 A0 - 2 B0 + 9 B1.
SpinClass3 to_basis3(const SpinClass& s) {
  return {s.a0 + Rational(3) * s.a1, s.b0 - Rational(2) * s.a1, s.b1 + Rational(9) * s.a1};
}

SpinClass from_basis3(const SpinClass3& t) { return {t.a0, t.b0, Rational(0), t.b1}; }

bool equivalent(const SpinClass& s, const SpinClass& t) { return to_basis3(s) == to_basis3(t); }

SpinClass pullback_from_m2bar(const M2barClass& x) {
  return {x.delta0, Rational(kB0RamificationIndex) * x.delta0, x.delta1, x.delta1};
}

const CitedConstant& canonical_m2bar() {
  static const CitedConstant k{"K_M2bar",
                               {Rational(-11, 5), Rational(-16, 5)},
                               "canonical class of the moduli space of stable genus-2 curves"};
  return k;
}

const CitedConstant& bielliptic_m2bar() {
  static const CitedConstant e{"E_M2bar",
                               {Rational(3), Rational(12)},
                               "class of the closure of the bielliptic locus in the moduli space "
                               "of stable genus-2 curves"};
  return e;
}

FiberDegrees fiber_degrees() {
  const auto& g1 = theta::kGenus1Thetas;
  const auto pairs = theta::genus1_pair_counts();
  FiberDegrees deg{{g1.total, kB0RamificationIndex * g1.even}, {pairs.even_even, pairs.odd_odd}};
  const auto forgetful_degree = static_cast<int>(theta::enumerate_even().size());
  for (auto [x, y] : {deg.over_delta0, deg.over_delta1}) {
    if (x + y != forgetful_degree) {
      throw VerificationFailure("fibre degrees " + std::to_string(x) + " + " + std::to_string(y) +
                                " do not add up to " + std::to_string(forgetful_degree));
    }
  }
  return deg;
}

SpinClass canonical_class() {
  SpinClass k = pullback_from_m2bar(canonical_m2bar().value);
  k.b0 += Rational(kB0RamificationIndex - 1);
  return k;
}

SpinClass bielliptic_class() {
  const auto invariant = static_cast<long>(theta::bielliptic_fixed(theta::bielliptic_involution()).size());
  const auto degree = static_cast<long>(theta::enumerate_even().size());
  return pullback_from_m2bar(bielliptic_m2bar().value).scaled(Rational(invariant, degree));
}

SpinClass stack_boundary_class() {
  return {Rational(1), Rational(1), Rational(1, 2), Rational(1, 2)};
}

SpinClass log_canonical_divisor(const Rational& epsilon) {
  const Rational half(1, 2);
  // Codimension-one ramification of the stack-to-coarse map: A1, B1 and the
  // bielliptic locus, each with weight 1/2.
  const SpinClass stack_ramification =
      SpinClass{Rational(0), Rational(0), half, half} + bielliptic_class().scaled(half);
  return canonical_class() + stack_ramification + stack_boundary_class().scaled(epsilon);
}

std::vector<EpsilonConstraint> spin_threshold_constraints() {
  const SpinClass base = log_canonical_divisor(Rational(0));
  const SpinClass direction = log_canonical_divisor(Rational(1)) - base;
  std::vector<EpsilonConstraint> out;
  for (std::size_t i = 0; i < 4; ++i) {
    EpsilonConstraint c{nef_inequality_text()[i], nef_inequality_value(i, direction),
                        nef_inequality_value(i, base), std::nullopt};
    if (c.slope.sign() > 0) c.lower_bound = -c.offset / c.slope;
    out.push_back(std::move(c));
  }
  return out;
}

Rational nef_threshold_spin() {
  std::optional<Rational> threshold;
  for (const auto& c : spin_threshold_constraints()) {
    if (c.slope.sign() < 0) {
      throw VerificationFailure("nef condition '" + std::string(c.inequality) +
                                "' bounds epsilon from above");
    }
    if (c.slope.is_zero()) {
      if (c.offset.sign() <= 0) {
        throw VerificationFailure("nef condition '" + std::string(c.inequality) +
                                  "' fails or is never strict for every epsilon");
      }
      continue;
    }
    if (!threshold || *c.lower_bound > *threshold) threshold = c.lower_bound;
  }
  if (!threshold) throw VerificationFailure("no nef condition constrains epsilon");
  return *threshold;
}

InvClass inv_log_canonical(const Rational& epsilon) {
  // Pullback of Delta0 from the invariant model of M2 is A0inv + 2 B0inv; the
  // boundary point Delta1 is contracted, so only Delta0 terms survive.
  const Rational e(kB0RamificationIndex);
  const Rational k_x = canonical_m2bar().value.delta0;
  const Rational bielliptic = bielliptic_m2bar().value.delta0;
  const Rational invariant_fraction(
      static_cast<long>(theta::bielliptic_fixed(theta::bielliptic_involution()).size()),
      static_cast<long>(theta::enumerate_even().size()));
  const Rational half(1, 2);

  // Coefficients on (A0inv, B0inv).
  Rational a = k_x + half * invariant_fraction * bielliptic + epsilon;
  Rational b = k_x * e + (e - Rational(1)) + half * invariant_fraction * bielliptic * e + epsilon;
  return InvClass::from_pair(a, b);
}

Rational inv_threshold() {
  const Rational at0 = inv_log_canonical(Rational(0)).coeff_a0inv();
  const Rational slope = inv_log_canonical(Rational(1)).coeff_a0inv() - at0;
  if (slope.sign() <= 0) throw VerificationFailure("invariant log canonical class is not increasing");
  return -at0 / slope;
}

EpsilonRegime classify(const Rational& epsilon) {
  if (epsilon > nef_threshold_spin()) return EpsilonRegime::FullModel;
  const Rational inv = inv_threshold();
  if (epsilon > inv) return EpsilonRegime::InvariantModel;
  if (epsilon == inv) return EpsilonRegime::Point;
  return EpsilonRegime::NotEffective;
}

}  // namespace evenspin::spincone
