#include "evenspin/exactmath/series.hpp"

#include <string>

#include "evenspin/errors.hpp"

namespace evenspin {

TruncatedSeries::TruncatedSeries(std::size_t order) : coefficients_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients, std::size_t order)
    : coefficients_(std::move(coefficients)) {
  coefficients_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  TruncatedSeries s(order);
  s.coefficients_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::inverse_of_polynomial(std::span<const Rational> p,
                                                       std::size_t order) {
  if (p.empty() || p[0] != Rational(1)) {
    throw InvalidInput("series inverse requires a polynomial with constant term 1");
  }
  // s_k = -sum_{j=1..k} p_j s_{k-j}
  TruncatedSeries s(order);
  s.coefficients_[0] = 1;
  for (std::size_t k = 1; k <= order; ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k && j < p.size(); ++j) {
      if (!p[j].is_zero()) acc -= p[j] * s.coefficients_[k - j];
    }
    s.coefficients_[k] = acc;
  }
  return s;
}

const Rational& TruncatedSeries::coefficient(std::size_t degree) const {
  if (degree > order()) {
    throw InvalidInput("degree " + std::to_string(degree) + " beyond truncation order " +
                       std::to_string(order()));
  }
  return coefficients_[degree];
}

void TruncatedSeries::require_same_order(const TruncatedSeries& rhs) const {
  if (order() != rhs.order()) {
    throw InvalidInput("truncated series have different orders (" + std::to_string(order()) +
                       " vs " + std::to_string(rhs.order()) + ")");
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  require_same_order(rhs);
  for (std::size_t k = 0; k < coefficients_.size(); ++k) coefficients_[k] += rhs.coefficients_[k];
  return *this;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
  require_same_order(rhs);
  TruncatedSeries out(order());
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < coefficients_.size(); ++j) {
      out.coefficients_[i + j] += coefficients_[i] * rhs.coefficients_[j];
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& factor) const {
  TruncatedSeries out = *this;
  for (auto& c : out.coefficients_) c *= factor;
  return out;
}

}  // namespace evenspin
