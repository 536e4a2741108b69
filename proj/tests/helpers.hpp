#ifndef ROUGHREL_TESTS_HELPERS_HPP
#define ROUGHREL_TESTS_HELPERS_HPP

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "roughrel/roughrel.hpp"

namespace test {

// Builders addressing elements by numeric label, so test data reads like the
// worked examples ("1".."n" universes).
inline roughrel::Relation rel(const roughrel::UniverseRef& u,
                              std::initializer_list<std::pair<int, int>> label_pairs) {
  std::vector<std::pair<roughrel::Element, roughrel::Element>> idx;
  idx.reserve(label_pairs.size());
  for (auto [a, b] : label_pairs) {
    auto x = u->index_of(std::to_string(a));
    auto y = u->index_of(std::to_string(b));
    if (!x || !y) throw std::invalid_argument("label not in universe");
    idx.emplace_back(*x, *y);
  }
  return roughrel::Relation::from_pairs(u, idx);
}

inline roughrel::Subset set_of(const roughrel::UniverseRef& u,
                               std::initializer_list<int> labels) {
  std::vector<roughrel::Element> idx;
  idx.reserve(labels.size());
  for (int l : labels) {
    auto e = u->index_of(std::to_string(l));
    if (!e) throw std::invalid_argument("label not in universe");
    idx.push_back(*e);
  }
  return roughrel::Subset::of(u, idx);
}

}  // namespace test

#endif  // ROUGHREL_TESTS_HELPERS_HPP
