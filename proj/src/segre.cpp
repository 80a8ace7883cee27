#include "evenspin/segre.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "evenspin/errors.hpp"
#include "evenspin/exactmath/matrix.hpp"
#include "evenspin/exactmath/row_space.hpp"

namespace evenspin::segre {

namespace {

void require_index(std::size_t i) {
  if (i >= kVariables) throw InvalidInput("variable index " + std::to_string(i) + " out of range");
}

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

MultiPoly MultiPoly::constant(const Rational& c) { return monomial(Exponent{}, c); }

MultiPoly MultiPoly::variable(std::size_t i) {
  require_index(i);
  Exponent e{};
  e[i] = 1;
  return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Rational& c) {
  for (int x : e)
    if (x < 0) throw InvalidInput("negative exponent");
  MultiPoly p;
  p.add_term(e, c);
  return p;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

Rational MultiPoly::coefficient(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
  MultiPoly out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : rhs.terms_) {
      Exponent e{};
      for (std::size_t i = 0; i < kVariables; ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  }
  return out;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly out;
  for (const auto& [e, x] : terms_) out.add_term(e, x * c);
  return out;
}

MultiPoly MultiPoly::pow(int k) const {
  if (k < 0) throw InvalidInput("negative polynomial power");
  MultiPoly out = constant(1);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

Rational MultiPoly::evaluate(const Point& t) const {
  Rational total;
  for (const auto& [e, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < kVariables; ++i)
      for (int k = 0; k < e[i]; ++k) v *= t[i];
    total += v;
  }
  return total;
}

MultiPoly MultiPoly::partial(std::size_t i) const {
  require_index(i);
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent d = e;
    --d[i];
    out.add_term(d, c * Rational(e[i]));
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::array<MultiPoly, kVariables>& images) const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(c);
    for (std::size_t i = 0; i < kVariables; ++i)
      if (e[i] > 0) term = term * images[i].pow(e[i]);
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::permuted(const Permutation& sigma) const {
  if (sigma.degree() != static_cast<int>(kVariables)) {
    throw InvalidInput("coordinate permutations must have degree 6");
  }
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    Exponent image{};
    for (std::size_t i = 0; i < kVariables; ++i) {
      image[static_cast<std::size_t>(sigma(static_cast<int>(i) + 1) - 1)] = e[i];
    }
    out.add_term(image, c);
  }
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest exponents first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    os << c;
    for (std::size_t i = 0; i < kVariables; ++i) {
      if (e[i] == 0) continue;
      os << "*t" << i;
      if (e[i] > 1) os << '^' << e[i];
    }
  }
  return os.str();
}

MultiPoly power_sum(int k) {
  if (k < 1) throw InvalidInput("power sums are defined for k >= 1");
  MultiPoly s;
  for (std::size_t i = 0; i < kVariables; ++i) {
    Exponent e{};
    e[i] = k;
    s += MultiPoly::monomial(e);
  }
  return s;
}

ProjPoint ProjPoint::make(const Point& coords) {
  const auto lead = std::find_if(coords.begin(), coords.end(), [](const Rational& x) { return !x.is_zero(); });
  if (lead == coords.end()) throw InvalidInput("projective point with all coordinates zero");
  const Rational inv = Rational(1) / *lead;
  Point scaled = coords;
  for (auto& x : scaled) x *= inv;
  return ProjPoint(std::move(scaled));
}

std::string ProjPoint::str() const {
  const bool signs = std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) {
    return x == Rational(1) || x == Rational(-1);
  });
  std::ostringstream os;
  if (signs) {
    os << '[';
    for (std::size_t i = 0; i < kVariables; ++i) os << (i ? "," : "") << (coords_[i].sign() > 0 ? '+' : '-');
    os << ']';
  } else {
    os << '(';
    for (std::size_t i = 0; i < kVariables; ++i) os << (i ? " : " : "") << coords_[i];
    os << ')';
  }
  return os.str();
}

PlaneInCubic PlaneInCubic::make(std::array<std::pair<int, int>, 3> pairs) {
  ActedObject flat;
  for (auto [i, j] : pairs) {
    flat.push_back(i + 1);
    flat.push_back(j + 1);
  }
  return from_pairing(canonical_object(Action::Pairing, static_cast<int>(kVariables), flat));
}

ActedObject PlaneInCubic::as_pairing() const {
  ActedObject flat;
  for (auto [i, j] : pairs_) {
    flat.push_back(i + 1);
    flat.push_back(j + 1);
  }
  return flat;
}

PlaneInCubic PlaneInCubic::from_pairing(const ActedObject& pairing) {
  const ActedObject canon = canonical_object(Action::Pairing, static_cast<int>(kVariables), pairing);
  std::array<std::pair<int, int>, 3> pairs{};
  for (std::size_t k = 0; k < 3; ++k) pairs[k] = {canon[2 * k] - 1, canon[2 * k + 1] - 1};
  return PlaneInCubic(pairs);
}

bool PlaneInCubic::lies_on_cubic() const {
  // Parametrize the plane by the smaller index of each pair.
  std::array<MultiPoly, kVariables> images;
  for (auto [i, j] : pairs_) {
    images[static_cast<std::size_t>(i)] = MultiPoly::variable(static_cast<std::size_t>(i));
    images[static_cast<std::size_t>(j)] = MultiPoly::variable(static_cast<std::size_t>(i)).scaled(-1);
  }
  return power_sum(1).substitute(images).is_zero() && power_sum(3).substitute(images).is_zero();
}

std::string PlaneInCubic::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < 3; ++k) {
    os << (k ? ", " : "") << 't' << pairs_[k].first << "+t" << pairs_[k].second;
  }
  os << ')';
  return os.str();
}

std::vector<PlaneInCubic> enumerate_planes() {
  std::set<PlaneInCubic> planes;
  std::array<int, kVariables> order{0, 1, 2, 3, 4, 5};
  do {
    planes.insert(PlaneInCubic::make({std::pair{order[0], order[1]}, std::pair{order[2], order[3]},
                                      std::pair{order[4], order[5]}}));
  } while (std::next_permutation(order.begin(), order.end()));
  std::vector<PlaneInCubic> out(planes.begin(), planes.end());
  for (const auto& p : out) {
    if (!p.lies_on_cubic()) throw VerificationFailure("plane " + p.str() + " is not on the cubic");
  }
  if (out.size() != 15) throw VerificationFailure("expected 15 planes, found " + std::to_string(out.size()));
  return out;
}

bool on_cubic(const Point& t) {
  return power_sum(1).evaluate(t).is_zero() && power_sum(3).evaluate(t).is_zero();
}

std::size_t jacobian_rank(const Point& t) {
  const std::array<MultiPoly, 2> equations{power_sum(1), power_sum(3)};
  RationalMatrix jac(2, kVariables);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < kVariables; ++c) jac.at(r, c) = equations[r].partial(c).evaluate(t);
  return jac.rank();
}

ActedObject node_to_subset_class(const ProjPoint& node) {
  ActedObject positive;
  for (std::size_t i = 0; i < kVariables; ++i)
    if (node.coords()[i].sign() > 0) positive.push_back(static_cast<int>(i) + 1);
  if (positive.size() != 3 || !on_cubic(node.coords())) {
    throw InvalidInput("point " + node.str() + " is not a node of the cubic");
  }
  return canonical_object(Action::SubsetModComplement, static_cast<int>(kVariables), positive);
}

ProjPoint node_from_subset_class(const ActedObject& subset_class) {
  const ActedObject canon =
      canonical_object(Action::SubsetModComplement, static_cast<int>(kVariables), subset_class);
  if (canon.size() != 3) throw InvalidInput("a node corresponds to a 3-subset");
  Point p;
  for (std::size_t i = 0; i < kVariables; ++i) {
    p[i] = std::binary_search(canon.begin(), canon.end(), static_cast<int>(i) + 1) ? 1 : -1;
  }
  return ProjPoint::make(p);
}

std::vector<ProjPoint> enumerate_nodes() {
  std::set<ProjPoint> nodes;
  for (int mask = 0; mask < (1 << kVariables); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != 3) continue;
    Point p;
    for (std::size_t i = 0; i < kVariables; ++i) p[i] = (mask >> i) & 1 ? 1 : -1;
    nodes.insert(ProjPoint::make(p));
  }
  std::vector<ProjPoint> out(nodes.begin(), nodes.end());
  for (const auto& n : out) {
    if (!on_cubic(n.coords())) throw VerificationFailure("node " + n.str() + " is not on the cubic");
    if (jacobian_rank(n.coords()) > 1) {
      throw VerificationFailure("node " + n.str() + " is a smooth point of the cubic");
    }
  }
  if (out.size() != 10) throw VerificationFailure("expected 10 nodes, found " + std::to_string(out.size()));
  return out;
}

std::vector<std::vector<PlaneInCubic>> plane_orbits() {
  const PermGroup g = split_triples_group();
  std::vector<ActedObject> pairings;
  for (const auto& p : enumerate_planes()) pairings.push_back(p.as_pairing());
  std::vector<std::vector<PlaneInCubic>> out;
  for (const auto& orbit : g.orbit_partition(pairings, Action::Pairing)) {
    std::vector<PlaneInCubic> planes;
    for (const auto& x : orbit) planes.push_back(PlaneInCubic::from_pairing(x));
    out.push_back(std::move(planes));
  }
  const PlaneInCubic pi1 = PlaneInCubic::make({std::pair{0, 3}, std::pair{1, 4}, std::pair{2, 5}});
  const PlaneInCubic pi2 = PlaneInCubic::make({std::pair{0, 1}, std::pair{2, 3}, std::pair{4, 5}});
  auto has = [](const auto& v, const auto& x) { return std::find(v.begin(), v.end(), x) != v.end(); };
  if (out.size() != 2 || out[0].size() != 6 || out[1].size() != 9 || !has(out[0], pi1) ||
      !has(out[1], pi2)) {
    throw VerificationFailure("plane orbits differ from {6 (t0+t3,...), 9 (t0+t1,...)}");
  }
  return out;
}

std::vector<std::vector<ProjPoint>> node_orbits() {
  const PermGroup g = split_triples_group();
  auto to_signs = [](const ProjPoint& p) {
    ActedObject v;
    for (const auto& x : p.coords()) v.push_back(x.sign());
    return v;
  };
  std::vector<ActedObject> signs;
  for (const auto& n : enumerate_nodes()) signs.push_back(to_signs(n));
  std::vector<std::vector<ProjPoint>> out;
  for (const auto& orbit : g.orbit_partition(signs, Action::SignVectorModNegation)) {
    std::vector<ProjPoint> nodes;
    for (const auto& v : orbit) {
      Point p;
      for (std::size_t i = 0; i < kVariables; ++i) p[i] = v[i];
      nodes.push_back(ProjPoint::make(p));
    }
    out.push_back(std::move(nodes));
  }
  const ProjPoint fixed = ProjPoint::make({1, 1, 1, -1, -1, -1});
  if (out.size() != 2 || out[0].size() != 1 || out[1].size() != 9 || out[0][0] != fixed) {
    throw VerificationFailure("node orbits differ from {1 [+,+,+,-,-,-], 9}");
  }
  return out;
}

TruncatedSeries molien_series(const PermGroup& g, std::size_t truncation) {
  if (g.degree() != static_cast<int>(kVariables)) {
    throw InvalidInput("Molien series needs a group acting on the 6 coordinates");
  }
  std::map<std::vector<int>, TruncatedSeries> by_cycle_type;
  TruncatedSeries total(truncation);
  for (const auto& sigma : g.elements()) {
    const auto type = sigma.cycle_type();
    auto it = by_cycle_type.find(type);
    if (it == by_cycle_type.end()) {
      // 1/det(1 - q sigma) = prod over cycles of 1/(1 - q^len).
      TruncatedSeries factor = TruncatedSeries::one(truncation);
      for (int len : type) {
        std::vector<Rational> p(static_cast<std::size_t>(len) + 1);
        p[0] = 1;
        p[static_cast<std::size_t>(len)] = -1;
        factor = factor * TruncatedSeries::inverse_of_polynomial(p, truncation);
      }
      it = by_cycle_type.emplace(type, std::move(factor)).first;
    }
    total += it->second;
  }
  return total.scaled(Rational(1, static_cast<long>(g.order())));
}

namespace {

void require_truncation(std::size_t degree, std::size_t truncation) {
  if (degree > truncation) {
    throw InvalidInput("degree " + std::to_string(degree) + " exceeds the series truncation " +
                       std::to_string(truncation));
  }
}

long integral(const Rational& x, const char* what) {
  if (!x.is_integer()) throw VerificationFailure(std::string(what) + " is not an integer: " + x.str());
  return x.to_long();
}

}  // namespace

long molien_coefficient(const PermGroup& g, std::size_t degree, std::size_t truncation) {
  require_truncation(degree, truncation);
  return integral(molien_series(g, truncation).coefficient(degree), "Molien coefficient");
}

long quotient_dimension_molien(std::size_t degree, std::size_t truncation) {
  require_truncation(degree, truncation);
  // (1 - q)(1 - q^3) = 1 - q - q^3 + q^4
  std::vector<Rational> ideal_factor{1, -1, 0, -1, 1};
  const TruncatedSeries moduli = TruncatedSeries(ideal_factor, truncation);
  const TruncatedSeries series = molien_series(split_triples_group(), truncation) * moduli;
  return integral(series.coefficient(degree), "quotient Molien coefficient");
}

std::vector<Exponent> monomials_of_degree(std::size_t degree) {
  std::vector<Exponent> out;
  Exponent e{};
  std::function<void(std::size_t, int)> fill = [&](std::size_t i, int left) {
    if (i + 1 == kVariables) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      fill(i + 1, left - k);
    }
  };
  fill(0, static_cast<int>(degree));
  return out;
}

long quotient_dimension_reynolds(std::size_t degree) {
  const auto monomials = monomials_of_degree(degree);
  std::map<Exponent, std::size_t> index;
  for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
  auto to_vector = [&](const MultiPoly& p) {
    SparseVector v;
    for (const auto& [e, c] : p.terms()) v.emplace(index.at(e), c);
    return v;
  };

  SparseRowSpace space;
  for (const auto& [generator, shift] : {std::pair{power_sum(1), std::size_t{1}}, std::pair{power_sum(3), std::size_t{3}}}) {
    if (degree < shift) continue;
    for (const auto& m : monomials_of_degree(degree - shift)) {
      space.insert(to_vector(generator * MultiPoly::monomial(m)));
    }
  }
  const std::size_t ideal_rank = space.rank();

  const PermGroup g = split_triples_group();
  const Rational weight(1, static_cast<long>(g.order()));
  std::set<std::map<Exponent, Rational>> averaged;
  for (const auto& m : monomials) {
    const MultiPoly mono = MultiPoly::monomial(m);
    MultiPoly sum;
    for (const auto& sigma : g.elements()) sum += mono.permuted(sigma);
    averaged.insert(sum.scaled(weight).terms());
  }
  for (const auto& terms : averaged) {
    SparseVector v;
    for (const auto& [e, c] : terms) v.emplace(index.at(e), c);
    space.insert(std::move(v));
  }
  return static_cast<long>(space.rank() - ideal_rank);
}

long quotient_invariant_dimension(std::size_t degree, std::size_t truncation) {
  const long molien = quotient_dimension_molien(degree, truncation);
  if (degree <= kCrossCheckMaxDegree) {
    const long reynolds = quotient_dimension_reynolds(degree);
    if (molien != reynolds) {
      throw VerificationFailure("degree " + std::to_string(degree) + ": Molien gives " +
                                std::to_string(molien) + ", Reynolds rank gives " +
                                std::to_string(reynolds));
    }
  }
  return molien;
}

}  // namespace evenspin::segre
