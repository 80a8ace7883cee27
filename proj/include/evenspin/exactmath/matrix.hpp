#ifndef EVENSPIN_EXACTMATH_MATRIX_HPP
#define EVENSPIN_EXACTMATH_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "evenspin/exactmath/rational.hpp"

namespace evenspin {

using RationalVector = std::vector<Rational>;

/// Dense rows x cols grid of exact rationals. Sized for the desk-scale
/// systems used here (at most a few hundred entries per side).
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c);
  const Rational& at(std::size_t r, std::size_t c) const;

  RationalMatrix transpose() const;
  RationalVector operator*(const RationalVector& v) const;
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  std::size_t rank() const;

  /// Basis of the right null space {v : M v = 0}. Each vector is scaled to
  /// integer entries with gcd 1 and a positive leading (first nonzero) entry.
  /// Free variables are taken in increasing column order.
  std::vector<RationalVector> kernel_basis() const;

 private:
  // Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> reduce();

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

/// Rescales v to a primitive integer vector with positive leading entry.
/// The zero vector is returned unchanged.
RationalVector primitive_integer_vector(RationalVector v);

}  // namespace evenspin

#endif  // EVENSPIN_EXACTMATH_MATRIX_HPP
