#include "evenspin/permgrp.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "evenspin/errors.hpp"

namespace evenspin {

namespace {

void require_label(int degree, int label) {
  if (label < 1 || label > degree) {
    throw InvalidInput("label " + std::to_string(label) + " outside 1.." + std::to_string(degree));
  }
}

void require_distinct(int degree, const std::vector<int>& labels) {
  std::vector<bool> seen(static_cast<std::size_t>(degree) + 1, false);
  for (int l : labels) {
    require_label(degree, l);
    if (seen[static_cast<std::size_t>(l)]) throw InvalidInput("repeated label " + std::to_string(l));
    seen[static_cast<std::size_t>(l)] = true;
  }
}

ActedObject complement(int degree, const ActedObject& s) {
  ActedObject c;
  for (int l = 1; l <= degree; ++l)
    if (!std::binary_search(s.begin(), s.end(), l)) c.push_back(l);
  return c;
}

ActedObject canonical_subset_class(int degree, ActedObject s) {
  std::sort(s.begin(), s.end());
  if (s.empty() || s.front() != 1) return complement(degree, s);
  return s;
}

ActedObject canonical_pairing(ActedObject flat) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i + 1 < flat.size(); i += 2) {
    pairs.emplace_back(std::min(flat[i], flat[i + 1]), std::max(flat[i], flat[i + 1]));
  }
  std::sort(pairs.begin(), pairs.end());
  ActedObject out;
  for (auto [a, b] : pairs) {
    out.push_back(a);
    out.push_back(b);
  }
  return out;
}

ActedObject canonical_signs(ActedObject v) {
  if (!v.empty() && v.front() < 0)
    for (int& x : v) x = -x;
  return v;
}

}  // namespace

Permutation Permutation::identity(int degree) {
  if (degree < 0) throw InvalidInput("negative permutation degree");
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<int> images) {
  require_distinct(static_cast<int>(images.size()), images);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation result = identity(degree);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& cycle = *it;
    require_distinct(degree, cycle);
    Permutation c = identity(degree);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      c.images_[static_cast<std::size_t>(cycle[i] - 1)] = cycle[(i + 1) % cycle.size()];
    }
    result = c * result;
  }
  return result;
}

Permutation Permutation::parse(int degree, std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw InvalidInput("malformed cycle notation '" + std::string(text) + "'");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw InvalidInput("malformed cycle notation '" + std::string(text) + "'");
      cycle.push_back(std::stoi(std::string(text.substr(start, i - start))));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return from_cycles(degree, cycles);
}

int Permutation::operator()(int label) const {
  require_label(degree(), label);
  return images_[static_cast<std::size_t>(label - 1)];
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw InvalidInput("composing permutations of different degree");
  std::vector<int> images(images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = images_[static_cast<std::size_t>(rhs.images_[i] - 1)];
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t j = start; !seen[j]; j = static_cast<std::size_t>(images_[j] - 1)) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::string Permutation::str() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == static_cast<int>(start) + 1) continue;
    os << '(';
    bool first = true;
    for (std::size_t j = start; !seen[j]; j = static_cast<std::size_t>(images_[j] - 1)) {
      seen[j] = true;
      if (!first) os << ' ';
      os << j + 1;
      first = false;
    }
    os << ')';
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

std::string_view action_name(Action action) {
  switch (action) {
    case Action::Subset: return "subset";
    case Action::SubsetModComplement: return "subset-mod-complement";
    case Action::Pairing: return "pairing";
    case Action::SignVectorModNegation: return "sign-vector-mod-negation";
  }
  return "?";
}

Action parse_action(std::string_view name) {
  for (Action a : {Action::Subset, Action::SubsetModComplement, Action::Pairing,
                   Action::SignVectorModNegation}) {
    if (action_name(a) == name) return a;
  }
  throw InvalidInput("unknown action '" + std::string(name) + "'");
}

ActedObject canonical_object(Action action, int degree, ActedObject raw) {
  switch (action) {
    case Action::Subset:
      require_distinct(degree, raw);
      std::sort(raw.begin(), raw.end());
      return raw;
    case Action::SubsetModComplement:
      require_distinct(degree, raw);
      return canonical_subset_class(degree, std::move(raw));
    case Action::Pairing:
      if (degree % 2 != 0 || static_cast<int>(raw.size()) != degree) {
        throw InvalidInput("a pairing must match all " + std::to_string(degree) + " labels");
      }
      require_distinct(degree, raw);
      return canonical_pairing(std::move(raw));
    case Action::SignVectorModNegation:
      if (static_cast<int>(raw.size()) != degree) {
        throw InvalidInput("sign vector must have length " + std::to_string(degree));
      }
      for (int x : raw)
        if (x != 1 && x != -1) throw InvalidInput("sign vector entries must be +1 or -1");
      return canonical_signs(std::move(raw));
  }
  throw InvalidInput("unknown action");
}

ActedObject act(Action action, const Permutation& sigma, const ActedObject& x) {
  switch (action) {
    case Action::Subset:
    case Action::SubsetModComplement:
    case Action::Pairing: {
      ActedObject image;
      image.reserve(x.size());
      for (int l : x) image.push_back(sigma(l));
      if (action == Action::Subset) {
        std::sort(image.begin(), image.end());
        return image;
      }
      if (action == Action::SubsetModComplement) {
        return canonical_subset_class(sigma.degree(), std::move(image));
      }
      return canonical_pairing(std::move(image));
    }
    case Action::SignVectorModNegation: {
      // The entry at position i moves to position sigma(i).
      ActedObject image(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        image[static_cast<std::size_t>(sigma(static_cast<int>(i) + 1) - 1)] = x[i];
      }
      return canonical_signs(std::move(image));
    }
  }
  throw InvalidInput("unknown action");
}

PermGroup PermGroup::generate(int degree, std::vector<Permutation> generators) {
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw InvalidInput("generator " + g.str() + " has degree " + std::to_string(g.degree()) +
                         ", expected " + std::to_string(degree));
    }
  }
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::deque<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    const Permutation current = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      Permutation next = current * g;
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return PermGroup(degree, std::move(generators), {seen.begin(), seen.end()});
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

ActedObject PermGroup::canonical(Action action, const ActedObject& x) const {
  return canonical_object(action, degree_, x);
}

std::vector<ActedObject> PermGroup::orbit(const ActedObject& x, Action action) const {
  const ActedObject seed = canonical(action, x);
  std::set<ActedObject> out;
  for (const auto& g : elements_) out.insert(act(action, g, seed));
  return {out.begin(), out.end()};
}

PermGroup PermGroup::stabilizer(const ActedObject& x, Action action) const {
  const ActedObject seed = canonical(action, x);
  std::vector<Permutation> fixing;
  for (const auto& g : elements_)
    if (act(action, g, seed) == seed) fixing.push_back(g);
  std::vector<Permutation> gens;
  for (const auto& g : fixing)
    if (!g.is_identity()) gens.push_back(g);
  return PermGroup(degree_, std::move(gens), std::move(fixing));
}

std::vector<std::vector<ActedObject>> PermGroup::orbit_partition(std::vector<ActedObject> xs,
                                                                 Action action) const {
  std::set<ActedObject> pool;
  for (auto& x : xs) pool.insert(canonical(action, x));
  std::set<ActedObject> assigned;
  std::vector<std::vector<ActedObject>> orbits;
  for (const auto& x : pool) {
    if (assigned.count(x)) continue;
    auto o = orbit(x, action);
    for (const auto& y : o) {
      if (!pool.count(y)) throw InvalidInput("object collection is not closed under the action");
      assigned.insert(y);
    }
    orbits.push_back(std::move(o));
  }
  std::stable_sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  return orbits;
}

PermGroup trivial_group(int degree) { return PermGroup::generate(degree, {}); }

PermGroup symmetric_group(int degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    gens.push_back(Permutation::from_cycles(degree, {{1, 2}}));
    std::vector<int> full(static_cast<std::size_t>(degree));
    std::iota(full.begin(), full.end(), 1);
    gens.push_back(Permutation::from_cycles(degree, {full}));
  }
  return PermGroup::generate(degree, std::move(gens));
}

PermGroup split_triples_group() {
  return PermGroup::generate(6, {
                                    Permutation::from_cycles(6, {{1, 2, 3}}),
                                    Permutation::from_cycles(6, {{1, 2}}),
                                    Permutation::from_cycles(6, {{4, 5, 6}}),
                                    Permutation::from_cycles(6, {{4, 5}}),
                                    Permutation::from_cycles(6, {{1, 4}, {2, 5}, {3, 6}}),
                                });
}

}  // namespace evenspin
