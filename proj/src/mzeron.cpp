#include "evenspin/mzeron.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <mutex>
#include <sstream>

#include "evenspin/errors.hpp"

namespace evenspin::mzeron {

namespace {

void require_n(int n) {
  if (n < kMinMarkedPoints || n > kMaxMarkedPoints) {
    throw InvalidInput("number of marked points must lie in " + std::to_string(kMinMarkedPoints) +
                       ".." + std::to_string(kMaxMarkedPoints) + ", got " + std::to_string(n));
  }
}

std::uint32_t full_mask(int n) { return (std::uint32_t{1} << n) - 1; }

std::uint32_t bit(int label) { return std::uint32_t{1} << (label - 1); }

std::vector<int> mask_labels(std::uint32_t mask) {
  std::vector<int> out;
  for (int l = 1; mask != 0; ++l, mask >>= 1)
    if (mask & 1U) out.push_back(l);
  return out;
}

std::uint32_t permute_mask(const Permutation& sigma, std::uint32_t mask) {
  std::uint32_t out = 0;
  for (int l : mask_labels(mask)) out |= bit(sigma(l));
  return out;
}

std::string join_labels(const std::vector<int>& labels) {
  std::ostringstream os;
  for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? "," : "") << labels[i];
  return os.str();
}

}  // namespace

BoundaryClass BoundaryClass::make(int n, const std::vector<int>& subset) {
  require_n(n);
  std::uint32_t mask = 0;
  for (int l : subset) {
    if (l < 1 || l > n) throw InvalidInput("boundary label " + std::to_string(l) + " out of range");
    if (mask & bit(l)) throw InvalidInput("repeated boundary label " + std::to_string(l));
    mask |= bit(l);
  }
  const int size = std::popcount(mask);
  if (size < 2 || size > n - 2) {
    throw InvalidInput("boundary subset must have between 2 and n-2 labels, got " +
                       std::to_string(size));
  }
  if (!(mask & 1U)) mask = full_mask(n) ^ mask;
  return BoundaryClass(n, mask);
}

std::vector<int> BoundaryClass::labels() const { return mask_labels(mask_); }

BoundaryClass BoundaryClass::permuted(const Permutation& sigma) const {
  if (sigma.degree() != n_) throw InvalidInput("permutation degree does not match n");
  return make(n_, mask_labels(permute_mask(sigma, mask_)));
}

std::string BoundaryClass::str() const { return "D{" + join_labels(labels()) + "}"; }

std::strong_ordering operator<=>(const BoundaryClass& a, const BoundaryClass& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = std::popcount(a.mask_) <=> std::popcount(b.mask_); c != 0) return c;
  return a.labels() <=> b.labels();
}

FCurve::FCurve(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
  for (auto& b : blocks_) std::sort(b.begin(), b.end());
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  for (const auto& b : blocks_) {
    std::uint32_t m = 0;
    for (int l : b) m |= bit(l);
    masks_.push_back(m);
  }
}

FCurve FCurve::make(int n, const std::vector<std::vector<int>>& blocks) {
  require_n(n);
  if (blocks.size() != 4) throw InvalidInput("an F-curve needs exactly four blocks");
  std::uint32_t seen = 0;
  for (const auto& b : blocks) {
    if (b.empty()) throw InvalidInput("F-curve blocks must be nonempty");
    for (int l : b) {
      if (l < 1 || l > n) throw InvalidInput("F-curve label " + std::to_string(l) + " out of range");
      if (seen & bit(l)) throw InvalidInput("F-curve blocks must be disjoint");
      seen |= bit(l);
    }
  }
  if (seen != full_mask(n)) throw InvalidInput("F-curve blocks must cover all labels");
  return FCurve(n, blocks);
}

FCurve FCurve::permuted(const Permutation& sigma) const {
  if (sigma.degree() != n_) throw InvalidInput("permutation degree does not match n");
  std::vector<std::vector<int>> image;
  for (const auto& b : blocks_) {
    std::vector<int> nb;
    for (int l : b) nb.push_back(sigma(l));
    image.push_back(std::move(nb));
  }
  return FCurve(n_, std::move(image));
}

std::string FCurve::str() const {
  std::string s = "F{";
  for (std::size_t i = 0; i < blocks_.size(); ++i) s += (i ? "|" : "") + join_labels(blocks_[i]);
  return s + "}";
}

DivisorClass::DivisorClass(int n) : n_(n) { require_n(n); }

DivisorClass DivisorClass::of(const BoundaryClass& d, const Rational& coefficient) {
  DivisorClass out(d.marked_points());
  out.add(d, coefficient);
  return out;
}

Rational DivisorClass::coefficient(const BoundaryClass& d) const {
  const auto it = terms_.find(d);
  return it == terms_.end() ? Rational(0) : it->second;
}

void DivisorClass::add(const BoundaryClass& d, const Rational& coefficient) {
  if (d.marked_points() != n_) throw InvalidInput("boundary class has a different n");
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& rhs) {
  if (rhs.n_ != n_) throw InvalidInput("adding divisor classes with different n");
  for (const auto& [d, c] : rhs.terms_) add(d, c);
  return *this;
}

DivisorClass DivisorClass::scaled(const Rational& factor) const {
  DivisorClass out(n_);
  if (factor.is_zero()) return out;
  for (const auto& [d, c] : terms_) out.terms_.emplace(d, c * factor);
  return out;
}

DivisorClass DivisorClass::permuted(const Permutation& sigma) const {
  DivisorClass out(n_);
  for (const auto& [d, c] : terms_) out.add(d.permuted(sigma), c);
  return out;
}

std::string DivisorClass::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [d, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.str() + "*" + d.str();
  }
  return s;
}

std::vector<BoundaryClass> enumerate_boundaries(int n) {
  require_n(n);
  std::vector<BoundaryClass> out;
  // Masks containing label 1 enumerate each class exactly once.
  for (std::uint32_t mask = 1; mask <= full_mask(n); mask += 2) {
    const int size = std::popcount(mask);
    if (size >= 2 && size <= n - 2) out.push_back(BoundaryClass::make(n, mask_labels(mask)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<FCurve>& enumerate_fcurves(int n) {
  require_n(n);
  static std::array<std::vector<FCurve>, kMaxMarkedPoints + 1> cache;
  static std::array<std::once_flag, kMaxMarkedPoints + 1> filled;
  std::call_once(filled[static_cast<std::size_t>(n)], [n] {
    std::vector<FCurve> curves;
    // Restricted growth strings: label i joins an existing block or opens the next one.
    std::vector<int> assignment(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> place = [&](int label, int used) {
      if (n - label < 4 - used) return;
      if (label == n) {
        std::vector<std::vector<int>> blocks(4);
        for (int l = 0; l < n; ++l) blocks[static_cast<std::size_t>(assignment[static_cast<std::size_t>(l)])].push_back(l + 1);
        curves.push_back(FCurve::make(n, blocks));
        return;
      }
      for (int b = 0; b <= std::min(used, 3); ++b) {
        assignment[static_cast<std::size_t>(label)] = b;
        place(label + 1, b == used ? used + 1 : used);
      }
    };
    place(0, 0);
    std::sort(curves.begin(), curves.end());
    cache[static_cast<std::size_t>(n)] = std::move(curves);
  });
  return cache[static_cast<std::size_t>(n)];
}

int intersect(const BoundaryClass& d, const FCurve& f) {
  if (d.marked_points() != f.marked_points()) {
    throw InvalidInput("boundary class and F-curve have different n");
  }
  const std::uint32_t s = d.mask();
  const std::uint32_t sc = full_mask(d.marked_points()) ^ s;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::uint32_t b = f.block_mask(i);
    if (s == b || sc == b) return -1;
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const std::uint32_t u = f.block_mask(i) | f.block_mask(j);
      if (s == u || sc == u) return 1;
    }
  }
  return 0;
}

Rational intersect(const DivisorClass& d, const FCurve& f) {
  if (d.marked_points() != f.marked_points()) {
    throw InvalidInput("divisor class and F-curve have different n");
  }
  Rational total;
  for (const auto& [b, c] : d.terms()) {
    const int k = intersect(b, f);
    if (k != 0) total += c * Rational(k);
  }
  return total;
}

DivisorClass orbit_sum(const PermGroup& g, const BoundaryClass& seed) {
  if (g.degree() != seed.marked_points()) {
    throw InvalidInput("group degree " + std::to_string(g.degree()) + " does not match n = " +
                       std::to_string(seed.marked_points()));
  }
  DivisorClass out(seed.marked_points());
  for (const auto& member : g.orbit(seed.labels(), Action::SubsetModComplement)) {
    out.add(BoundaryClass::make(seed.marked_points(), member), 1);
  }
  return out;
}

namespace {

FNefResult scan(const DivisorClass& d, bool strict) {
  for (const auto& f : enumerate_fcurves(d.marked_points())) {
    const int s = intersect(d, f).sign();
    if (s < 0 || (strict && s == 0)) return {false, f};
  }
  return {true, std::nullopt};
}

}  // namespace

FNefResult is_fnef(const DivisorClass& d) { return scan(d, false); }
FNefResult is_fample(const DivisorClass& d) { return scan(d, true); }

}  // namespace evenspin::mzeron
