#ifndef EVENSPIN_EXACTMATH_ROW_SPACE_HPP
#define EVENSPIN_EXACTMATH_ROW_SPACE_HPP

#include <cstddef>
#include <map>

#include "evenspin/exactmath/rational.hpp"

namespace evenspin {

using SparseVector = std::map<std::size_t, Rational>;

// Incrementally maintained echelon basis of a span of sparse vectors.
// Used for rank computations in spaces with a few hundred coordinates where
// the generating vectors have only a handful of nonzero entries.
class SparseRowSpace {
 public:
  /// Reduces v against the current basis; returns true (and extends the
  /// basis) iff v was not already in the span.
  bool insert(SparseVector v);

  /// True iff v lies in the span. Does not modify the basis.
  bool contains(SparseVector v) const;

  std::size_t rank() const { return pivots_.size(); }

 private:
  void reduce(SparseVector& v) const;

  // Keyed by pivot column; each row is normalized so its pivot entry is 1.
  std::map<std::size_t, SparseVector> pivots_;
};

}  // namespace evenspin

#endif  // EVENSPIN_EXACTMATH_ROW_SPACE_HPP
