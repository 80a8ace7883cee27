#include "evenspin/exactmath/row_space.hpp"

namespace evenspin {

void SparseRowSpace::reduce(SparseVector& v) const {
  auto it = v.begin();
  while (it != v.end()) {
    const auto pivot = pivots_.find(it->first);
    if (pivot == pivots_.end()) {
      ++it;
      continue;
    }
    const std::size_t column = it->first;
    const Rational factor = it->second;
    for (const auto& [c, x] : pivot->second) {
      Rational& slot = v[c];
      slot -= factor * x;
    }
    // Drop cancelled entries; everything before `column` is untouched.
    for (auto jt = v.lower_bound(column); jt != v.end();) {
      jt = jt->second.is_zero() ? v.erase(jt) : std::next(jt);
    }
    it = v.upper_bound(column);
  }
}

bool SparseRowSpace::insert(SparseVector v) {
  std::erase_if(v, [](const auto& kv) { return kv.second.is_zero(); });
  reduce(v);
  if (v.empty()) return false;
  const std::size_t lead = v.begin()->first;
  const Rational inv = Rational(1) / v.begin()->second;
  for (auto& [c, x] : v) x *= inv;
  pivots_.emplace(lead, std::move(v));
  return true;
}

bool SparseRowSpace::contains(SparseVector v) const {
  std::erase_if(v, [](const auto& kv) { return kv.second.is_zero(); });
  reduce(v);
  return v.empty();
}

}  // namespace evenspin
