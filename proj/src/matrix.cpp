#include "evenspin/exactmath/matrix.hpp"

#include <utility>

#include "evenspin/errors.hpp"

namespace evenspin {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InvalidInput("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidInput("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Rational& RationalMatrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw InvalidInput("matrix index out of range");
  return entries_[r * cols_ + c];
}

const Rational& RationalMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw InvalidInput("matrix index out of range");
  return entries_[r * cols_ + c];
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
  if (v.size() != cols_) throw InvalidInput("matrix-vector size mismatch");
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!v[c].is_zero()) out[r] += at(r, c) * v[c];
  return out;
}

std::vector<std::size_t> RationalMatrix::reduce() {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < cols_ && lead_row < rows_; ++c) {
    std::size_t p = lead_row;
    while (p < rows_ && at(p, c).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != lead_row)
      for (std::size_t k = 0; k < cols_; ++k) std::swap(at(p, k), at(lead_row, k));
    const Rational inv = Rational(1) / at(lead_row, c);
    for (std::size_t k = c; k < cols_; ++k) at(lead_row, k) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == lead_row || at(r, c).is_zero()) continue;
      const Rational factor = at(r, c);
      for (std::size_t k = c; k < cols_; ++k) at(r, k) -= factor * at(lead_row, k);
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return pivots;
}

std::size_t RationalMatrix::rank() const {
  RationalMatrix work = *this;
  return work.reduce().size();
}

std::vector<RationalVector> RationalMatrix::kernel_basis() const {
  RationalMatrix work = *this;
  const std::vector<std::size_t> pivots = work.reduce();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols_);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -work.at(i, free);
    basis.push_back(primitive_integer_vector(std::move(v)));
  }
  return basis;
}

RationalVector primitive_integer_vector(RationalVector v) {
  mpz_class lcm_den = 1;
  for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.denominator().get_mpz_t());
  mpz_class gcd_num = 0;
  for (const auto& x : v) {
    mpz_class scaled = x.numerator() * (lcm_den / x.denominator());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_mpz_t());
  }
  if (gcd_num == 0) return v;
  int lead_sign = 0;
  for (const auto& x : v) {
    if (!x.is_zero()) {
      lead_sign = x.sign();
      break;
    }
  }
  const Rational factor(mpq_class(lead_sign * lcm_den, gcd_num));
  for (auto& x : v) x *= factor;
  return v;
}

}  // namespace evenspin
