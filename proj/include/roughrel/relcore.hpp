#ifndef ROUGHREL_RELCORE_HPP
#define ROUGHREL_RELCORE_HPP

#include <algorithm>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "roughrel/bitset.hpp"

namespace roughrel {

using Element = std::size_t;

// Ordered finite set of labeled elements. Index i is the canonical position
// of labels()[i]; everything else in the library addresses elements by index
// and touches labels only at the I/O boundary.
class Universe {
 public:
  explicit Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw std::invalid_argument("universe must not be empty");
    std::vector<std::string> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("universe labels must be distinct");
  }

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element i) const { return labels_.at(i); }

  std::optional<Element> index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    return std::nullopt;
  }

  bool operator==(const Universe& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
};

using UniverseRef = std::shared_ptr<const Universe>;

inline UniverseRef make_universe(std::vector<std::string> labels) {
  return std::make_shared<const Universe>(std::move(labels));
}

// Labels "1".."n".
inline UniverseRef make_universe(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return make_universe(std::move(labels));
}

inline bool same_universe(const UniverseRef& a, const UniverseRef& b) {
  return a == b || (a && b && *a == *b);
}

inline void ensure_same_universe(const UniverseRef& a, const UniverseRef& b) {
  if (!same_universe(a, b)) throw std::invalid_argument("universe mismatch");
}

// X ⊆ U as a bitset over the universe's index space.
class Subset {
 public:
  explicit Subset(UniverseRef universe)
      : universe_(require(std::move(universe))), bits_(universe_->size()) {}

  Subset(UniverseRef universe, Bitset bits)
      : universe_(require(std::move(universe))), bits_(std::move(bits)) {
    if (bits_.size() != universe_->size())
      throw std::invalid_argument("subset bitset length must match universe size");
  }

  static Subset empty(UniverseRef universe) { return Subset(std::move(universe)); }

  static Subset full(UniverseRef universe) {
    Subset s(std::move(universe));
    for (Element i = 0; i < s.size(); ++i) s.bits_.set(i);
    return s;
  }

  static Subset of(UniverseRef universe, std::initializer_list<Element> members) {
    return of(std::move(universe), std::vector<Element>(members));
  }

  static Subset of(UniverseRef universe, const std::vector<Element>& members) {
    Subset s(std::move(universe));
    for (Element e : members) {
      if (e >= s.size()) throw std::invalid_argument("subset member out of range");
      s.bits_.set(e);
    }
    return s;
  }

  const UniverseRef& universe() const { return universe_; }
  const Bitset& bits() const { return bits_; }
  std::size_t size() const { return universe_->size(); }
  std::size_t count() const { return bits_.count(); }
  bool is_empty() const { return bits_.none(); }
  bool contains(Element e) const { return e < size() && bits_.test(e); }

  std::vector<Element> members() const { return bits_.indices(); }

  std::vector<std::string> member_labels() const {
    std::vector<std::string> out;
    bits_.for_each([&](Element e) { out.push_back(universe_->label(e)); });
    return out;
  }

  bool operator==(const Subset& other) const {
    return same_universe(universe_, other.universe_) && bits_ == other.bits_;
  }

  friend Subset operator|(const Subset& a, const Subset& b) {
    ensure_same_universe(a.universe_, b.universe_);
    return Subset(a.universe_, a.bits_ | b.bits_);
  }

  friend Subset operator&(const Subset& a, const Subset& b) {
    ensure_same_universe(a.universe_, b.universe_);
    return Subset(a.universe_, a.bits_ & b.bits_);
  }

  friend Subset operator~(const Subset& a) { return Subset(a.universe_, ~a.bits_); }

 private:
  static UniverseRef require(UniverseRef u) {
    if (!u) throw std::invalid_argument("null universe");
    return u;
  }

  UniverseRef universe_;
  Bitset bits_;
};

inline bool is_subset(const Subset& a, const Subset& b) {
  ensure_same_universe(a.universe(), b.universe());
  return a.bits().is_subset_of(b.bits());
}

// R ⊆ U×U as a square boolean matrix; row x is the successor set of x.
class Relation {
 public:
  explicit Relation(UniverseRef universe)
      : universe_(require(std::move(universe))),
        rows_(universe_->size(), Bitset(universe_->size())) {}

  Relation(UniverseRef universe, std::vector<Bitset> rows)
      : universe_(require(std::move(universe))), rows_(std::move(rows)) {
    if (rows_.size() != universe_->size())
      throw std::invalid_argument("relation matrix must be square over the universe");
    for (const Bitset& r : rows_)
      if (r.size() != universe_->size())
        throw std::invalid_argument("relation matrix must be square over the universe");
  }

  static Relation empty(UniverseRef universe) { return Relation(std::move(universe)); }

  static Relation full(UniverseRef universe) {
    Relation r(std::move(universe));
    for (auto& row : r.rows_) row = ~row;
    return r;
  }

  static Relation from_pairs(UniverseRef universe,
                             const std::vector<std::pair<Element, Element>>& pairs) {
    Relation r(std::move(universe));
    for (auto [x, y] : pairs) {
      if (x >= r.size() || y >= r.size())
        throw std::invalid_argument("relation pair out of range");
      r.rows_[x].set(y);
    }
    return r;
  }

  static Relation from_pairs(UniverseRef universe,
                             std::initializer_list<std::pair<Element, Element>> pairs) {
    return from_pairs(std::move(universe),
                      std::vector<std::pair<Element, Element>>(pairs));
  }

  const UniverseRef& universe() const { return universe_; }
  std::size_t size() const { return universe_->size(); }

  bool contains(Element x, Element y) const {
    return x < size() && y < size() && rows_[x].test(y);
  }

  const Bitset& row(Element x) const { return rows_.at(x); }

  Bitset column(Element y) const {
    Bitset col(size());
    for (Element x = 0; x < size(); ++x)
      if (rows_[x].test(y)) col.set(x);
    return col;
  }

  std::size_t pair_count() const {
    std::size_t c = 0;
    for (const auto& r : rows_) c += r.count();
    return c;
  }

  // Row-major order, the canonical pair order everywhere.
  std::vector<std::pair<Element, Element>> pairs() const {
    std::vector<std::pair<Element, Element>> out;
    for (Element x = 0; x < size(); ++x)
      rows_[x].for_each([&](Element y) { out.emplace_back(x, y); });
    return out;
  }

  bool operator==(const Relation& other) const {
    return same_universe(universe_, other.universe_) && rows_ == other.rows_;
  }

 private:
  static UniverseRef require(UniverseRef u) {
    if (!u) throw std::invalid_argument("null universe");
    return u;
  }

  UniverseRef universe_;
  std::vector<Bitset> rows_;
};

inline Relation identity_relation(const UniverseRef& u) {
  std::vector<Bitset> rows(u->size(), Bitset(u->size()));
  for (Element x = 0; x < u->size(); ++x) rows[x].set(x);
  return Relation(u, std::move(rows));
}

inline Relation converse(const Relation& r) {
  std::vector<Bitset> rows(r.size(), Bitset(r.size()));
  for (Element x = 0; x < r.size(); ++x)
    r.row(x).for_each([&](Element y) { rows[y].set(x); });
  return Relation(r.universe(), std::move(rows));
}

// (x,y) ∈ compose(f,g) iff there is z with (x,z) ∈ g and (z,y) ∈ f.
// NOTE the argument order: g applies first, then f.
inline Relation compose(const Relation& f, const Relation& g) {
  ensure_same_universe(f.universe(), g.universe());
  std::vector<Bitset> rows(f.size(), Bitset(f.size()));
  for (Element x = 0; x < f.size(); ++x)
    g.row(x).for_each([&](Element z) { rows[x] |= f.row(z); });
  return Relation(f.universe(), std::move(rows));
}

inline Relation union_of(const Relation& a, const Relation& b) {
  ensure_same_universe(a.universe(), b.universe());
  std::vector<Bitset> rows;
  rows.reserve(a.size());
  for (Element x = 0; x < a.size(); ++x) rows.push_back(a.row(x) | b.row(x));
  return Relation(a.universe(), std::move(rows));
}

inline Relation intersection_of(const Relation& a, const Relation& b) {
  ensure_same_universe(a.universe(), b.universe());
  std::vector<Bitset> rows;
  rows.reserve(a.size());
  for (Element x = 0; x < a.size(); ++x) rows.push_back(a.row(x) & b.row(x));
  return Relation(a.universe(), std::move(rows));
}

inline Relation complement_of(const Relation& a) {
  std::vector<Bitset> rows;
  rows.reserve(a.size());
  for (Element x = 0; x < a.size(); ++x) rows.push_back(~a.row(x));
  return Relation(a.universe(), std::move(rows));
}

inline Relation operator|(const Relation& a, const Relation& b) { return union_of(a, b); }
inline Relation operator&(const Relation& a, const Relation& b) { return intersection_of(a, b); }
inline Relation operator~(const Relation& a) { return complement_of(a); }

inline bool is_subrelation(const Relation& a, const Relation& b) {
  ensure_same_universe(a.universe(), b.universe());
  for (Element x = 0; x < a.size(); ++x)
    if (!a.row(x).is_subset_of(b.row(x))) return false;
  return true;
}

// power(r,0) is the identity; power(r,k+1) = compose(power(r,k), r).
inline Relation power(const Relation& r, std::size_t k) {
  Relation acc = identity_relation(r.universe());
  for (std::size_t i = 0; i < k; ++i) acc = compose(acc, r);
  return acc;
}

// Intermediate elements x1..x(k-1) of a length-k path from x to y, if any.
// Deterministic: each backtracking step picks the smallest admissible element.
inline std::optional<std::vector<Element>> path_witness(const Relation& r, std::size_t k,
                                                        Element x, Element y) {
  if (k == 0) throw std::invalid_argument("path witness requires k >= 1");
  if (x >= r.size() || y >= r.size())
    throw std::invalid_argument("path endpoint out of range");

  // layers[i] = elements reachable from x in exactly i steps, i = 0..k.
  std::vector<Bitset> layers(k + 1, Bitset(r.size()));
  layers[0].set(x);
  for (std::size_t i = 1; i <= k; ++i)
    layers[i - 1].for_each([&](Element z) { layers[i] |= r.row(z); });
  if (!layers[k].test(y)) return std::nullopt;

  std::vector<Element> witness(k - 1);
  Element target = y;
  for (std::size_t i = k; i-- > 1;) {
    Element pick = r.size();
    layers[i].for_each([&](Element z) {
      if (pick == r.size() && r.contains(z, target)) pick = z;
    });
    witness[i - 1] = pick;
    target = pick;
  }
  return witness;
}

inline bool is_reflexive(const Relation& r) {
  for (Element x = 0; x < r.size(); ++x)
    if (!r.contains(x, x)) return false;
  return true;
}

inline bool is_symmetric(const Relation& r) {
  for (Element x = 0; x < r.size(); ++x)
    for (Element y = x + 1; y < r.size(); ++y)
      if (r.contains(x, y) != r.contains(y, x)) return false;
  return true;
}

inline bool is_transitive(const Relation& r) {
  for (Element x = 0; x < r.size(); ++x) {
    bool ok = true;
    r.row(x).for_each([&](Element y) {
      if (ok && !r.row(y).is_subset_of(r.row(x))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

// Every element has at least one successor (no empty row).
inline bool is_serial(const Relation& r) {
  for (Element x = 0; x < r.size(); ++x)
    if (r.row(x).none()) return false;
  return true;
}

inline bool is_equivalence(const Relation& r) {
  return is_reflexive(r) && is_symmetric(r) && is_transitive(r);
}

inline Subset successor(const Relation& r, Element x) {
  if (x >= r.size()) throw std::invalid_argument("element out of range");
  return Subset(r.universe(), r.row(x));
}

inline Subset predecessor(const Relation& r, Element x) {
  if (x >= r.size()) throw std::invalid_argument("element out of range");
  return Subset(r.universe(), r.column(x));
}

}  // namespace roughrel

#endif  // ROUGHREL_RELCORE_HPP
