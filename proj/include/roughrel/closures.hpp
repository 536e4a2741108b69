#ifndef ROUGHREL_CLOSURES_HPP
#define ROUGHREL_CLOSURES_HPP

#include <vector>

#include "roughrel/relcore.hpp"

namespace roughrel {

inline Relation reflexive_closure(const Relation& r) {
  return union_of(r, identity_relation(r.universe()));
}

inline Relation symmetric_closure(const Relation& r) {
  return union_of(r, converse(r));
}

// Warshall pass with bit-parallel row OR. Computes reachability by paths of
// length >= 1, i.e. the union of all positive powers of r.
inline Relation transitive_closure(const Relation& r) {
  std::vector<Bitset> rows;
  rows.reserve(r.size());
  for (Element x = 0; x < r.size(); ++x) rows.push_back(r.row(x));
  for (Element z = 0; z < rows.size(); ++z) {
    for (Element x = 0; x < rows.size(); ++x)
      if (rows[x].test(z)) rows[x] |= rows[z];
  }
  return Relation(r.universe(), std::move(rows));
}

inline Relation ts_closure(const Relation& r) {
  return transitive_closure(symmetric_closure(r));
}

// Least equivalence relation containing r.
inline Relation equivalence_closure(const Relation& r) {
  return reflexive_closure(ts_closure(r));
}

// Reflexive-symmetric-transitive application order; unlike the equivalence
// closure the result need not be transitive.
inline Relation rst_closure(const Relation& r) {
  return reflexive_closure(symmetric_closure(transitive_closure(r)));
}

// Every element has a nonzero row or column. Holds iff the equivalence
// closure and the ts closure coincide.
inline bool no_isolated_elements(const Relation& r) {
  for (Element x = 0; x < r.size(); ++x) {
    if (r.row(x).any()) continue;
    bool incoming = false;
    for (Element y = 0; y < r.size() && !incoming; ++y)
      if (r.contains(y, x)) incoming = true;
    if (!incoming) return false;
  }
  return true;
}

}  // namespace roughrel

#endif  // ROUGHREL_CLOSURES_HPP
