#ifndef EVENSPIN_SPINCONE_HPP
#define EVENSPIN_SPINCONE_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evenspin/exactmath/rational.hpp"
#include "evenspin/mzeron.hpp"

// Divisor classes on the compactified moduli space of even spin curves of
// genus 2, written in the boundary classes A0, B0, A1, B1, together with the
// invariant-theoretic model whose Picard group is spanned by A0inv, B0inv.
namespace evenspin::spincone {

/// a*A0 + b*B0 + c*A1 + d*B1. Coordinates are free: tuples differing by a
/// multiple of the Picard relation are the same class (see equivalent()).
struct SpinClass {
  Rational a0, b0, a1, b1;

  SpinClass& operator+=(const SpinClass& rhs);
  SpinClass& operator-=(const SpinClass& rhs);
  SpinClass scaled(const Rational& factor) const;
  friend SpinClass operator+(SpinClass a, const SpinClass& b) { return a += b; }
  friend SpinClass operator-(SpinClass a, const SpinClass& b) { return a -= b; }
  friend bool operator==(const SpinClass&, const SpinClass&) = default;

  std::array<Rational, 4> coords() const { return {a0, b0, a1, b1}; }
  /// "a*A0 + b*B0 + c*A1 + d*B1"
  std::string str() const;
};

/// a*A0 + b*B0 + c*B1 in the basis obtained by eliminating A1.
struct SpinClass3 {
  Rational a0, b0, b1;
  friend bool operator==(const SpinClass3&, const SpinClass3&) = default;
  std::string str() const;
};

/// r0*Delta0 + r1*Delta1 on the moduli space of stable genus-2 curves.
struct M2barClass {
  Rational delta0, delta1;
};

/// Class on the invariant model, normalized to r*A0inv using 3 A0inv = 2 B0inv.
class InvClass {
 public:
  InvClass() = default;
  static InvClass from_pair(const Rational& a0inv, const Rational& b0inv);
  const Rational& coeff_a0inv() const { return coeff_; }
  friend bool operator==(const InvClass&, const InvClass&) = default;

 private:
  explicit InvClass(Rational coeff) : coeff_(std::move(coeff)) {}
  Rational coeff_;
};

/// Ordered so that the regime is monotone nondecreasing in epsilon.
enum class EpsilonRegime { NotEffective, Point, InvariantModel, FullModel };

/// "full", "invariant", "point" or "not-effective".
std::string_view regime_name(EpsilonRegime regime);

struct NefCheck {
  bool holds = false;
  /// Text of the first violated inequality when !holds.
  std::string violated;
};

/// a*Delta^{11} + b*Delta^{12} + c*Delta^c_{123} + d*Delta_{123} on M_{0,6},
/// each Delta a sum over an orbit of the split-triples group.
mzeron::DivisorClass lift(const SpinClass& s);

/// F-curve representatives Gamma_1..Gamma_5.
mzeron::FCurve gamma(int index);

using IntersectionTable = std::array<std::array<int, 5>, 4>;

/// Rows A0, B0, A1, B1 against Gamma_1..Gamma_5, computed through lift().
IntersectionTable intersection_table();

/// The four nef inequalities as text: "3a >= d", "a + 2b >= c", "2c >= b",
/// "b + c + d >= 2a".
const std::array<std::string_view, 4>& nef_inequality_text();
/// Left minus right side of nef inequality `index` (0-based) at s.
Rational nef_inequality_value(std::size_t index, const SpinClass& s);

NefCheck is_nef(const SpinClass& s);
NefCheck is_ample(const SpinClass& s);
/// Same cone in the basis {A0, B0, B1}: b <= 0 and max(c/3, -2b) <= a <= (b+c)/2.
NefCheck is_nef(const SpinClass3& s);
NefCheck is_ample(const SpinClass3& s);

/// Kernel of the pairing between the four lifted classes and all 65
/// F-curves. Throws VerificationFailure unless it is one-dimensional.
SpinClass picard_relation();

SpinClass3 to_basis3(const SpinClass& s);
SpinClass from_basis3(const SpinClass3& t);
/// Equal as classes, i.e. equal after eliminating A1.
bool equivalent(const SpinClass& s, const SpinClass& t);

SpinClass pullback_from_m2bar(const M2barClass& x);

struct CitedConstant {
  std::string name;
  M2barClass value;
  std::string source;
};

/// Canonical class and bielliptic locus of the moduli space of stable genus-2
/// curves, as used below.
const CitedConstant& canonical_m2bar();
const CitedConstant& bielliptic_m2bar();

struct FiberDegrees {
  std::pair<int, int> over_delta0;  // (A0, B0)
  std::pair<int, int> over_delta1;  // (A1, B1)
};

/// Sheet counts of the forgetful map over the boundary of the genus-2
/// moduli space. Throws VerificationFailure unless each pair sums to the
/// degree of the forgetful map.
FiberDegrees fiber_degrees();

SpinClass canonical_class();
SpinClass bielliptic_class();
/// Coefficient bookkeeping for the boundary class of the stack:
/// A0 + B0 + A1/2 + B1/2.
SpinClass stack_boundary_class();
SpinClass log_canonical_divisor(const Rational& epsilon);

/// Each nef inequality applied to log_canonical_divisor(eps) is
/// slope*eps + offset >= 0.
struct EpsilonConstraint {
  std::string_view inequality;
  Rational slope;
  Rational offset;
  /// eps >= *lower_bound when slope > 0; empty when the condition does not
  /// depend on eps.
  std::optional<Rational> lower_bound;
};

std::vector<EpsilonConstraint> spin_threshold_constraints();

/// Least eps with log_canonical_divisor(eps) nef. Throws VerificationFailure
/// unless the feasible set is a closed ray [t, inf) with ampleness exactly
/// on the open ray.
Rational nef_threshold_spin();

InvClass inv_log_canonical(const Rational& epsilon);
/// The eps at which inv_log_canonical vanishes.
Rational inv_threshold();

EpsilonRegime classify(const Rational& epsilon);

}  // namespace evenspin::spincone

#endif  // EVENSPIN_SPINCONE_HPP
