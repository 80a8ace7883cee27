#ifndef EVENSPIN_EXACTMATH_SERIES_HPP
#define EVENSPIN_EXACTMATH_SERIES_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "evenspin/exactmath/rational.hpp"

namespace evenspin {

/// Power series in q truncated after degree `order`; always holds order + 1
/// coefficients.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order);
  /// Coefficients beyond `order` are dropped, missing ones are zero.
  TruncatedSeries(std::vector<Rational> coefficients, std::size_t order);

  static TruncatedSeries one(std::size_t order);

  /// The series s with p * s = 1 modulo q^(order+1). `p` lists polynomial
  /// coefficients from degree 0 and must have constant term 1.
  static TruncatedSeries inverse_of_polynomial(std::span<const Rational> p, std::size_t order);

  std::size_t order() const { return coefficients_.size() - 1; }
  const Rational& coefficient(std::size_t degree) const;
  std::span<const Rational> coefficients() const { return coefficients_; }

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries operator*(const TruncatedSeries& rhs) const;
  TruncatedSeries scaled(const Rational& factor) const;
  friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) {
    return lhs += rhs;
  }
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  void require_same_order(const TruncatedSeries& rhs) const;

  std::vector<Rational> coefficients_;
};

}  // namespace evenspin

#endif  // EVENSPIN_EXACTMATH_SERIES_HPP
