#ifndef ROUGHREL_DEFINABLE_HPP
#define ROUGHREL_DEFINABLE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "roughrel/closures.hpp"
#include "roughrel/rough.hpp"

namespace roughrel {

inline constexpr std::size_t kDefaultPowersetCap = 20;
inline constexpr std::size_t kComponentCap = 20;

// Collection of subsets in canonical order: ascending by bitmask value with
// element 0 as the least significant bit. Members are distinct.
class SetFamily {
 public:
  explicit SetFamily(UniverseRef universe) : universe_(std::move(universe)) {
    if (!universe_) throw std::invalid_argument("null universe");
  }

  SetFamily(UniverseRef universe, std::vector<Subset> members)
      : universe_(std::move(universe)), members_(std::move(members)) {
    if (!universe_) throw std::invalid_argument("null universe");
    for (const Subset& s : members_) ensure_same_universe(universe_, s.universe());
    std::sort(members_.begin(), members_.end(), [](const Subset& a, const Subset& b) {
      return Bitset::value_less(a.bits(), b.bits());
    });
    auto dup = std::adjacent_find(members_.begin(), members_.end());
    if (dup != members_.end())
      throw std::invalid_argument("set family members must be distinct");
  }

  const UniverseRef& universe() const { return universe_; }
  std::size_t size() const { return members_.size(); }
  bool is_empty() const { return members_.empty(); }
  const Subset& operator[](std::size_t i) const { return members_.at(i); }
  const std::vector<Subset>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(const Subset& s) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), s,
                               [](const Subset& a, const Subset& b) {
                                 return Bitset::value_less(a.bits(), b.bits());
                               });
    return it != members_.end() && *it == s;
  }

  bool operator==(const SetFamily& other) const {
    return same_universe(universe_, other.universe_) && members_ == other.members_;
  }

 private:
  UniverseRef universe_;
  std::vector<Subset> members_;
};

// Disjoint nonempty blocks covering the universe, ordered by minimum element.
class Partition {
 public:
  Partition(UniverseRef universe, std::vector<Subset> blocks)
      : universe_(std::move(universe)), blocks_(std::move(blocks)) {
    if (!universe_) throw std::invalid_argument("null universe");
    Bitset covered(universe_->size());
    for (const Subset& b : blocks_) {
      ensure_same_universe(universe_, b.universe());
      if (b.is_empty()) throw std::invalid_argument("partition block must not be empty");
      if (covered.intersects(b.bits()))
        throw std::invalid_argument("partition blocks must be disjoint");
      covered |= b.bits();
    }
    if (covered.count() != universe_->size())
      throw std::invalid_argument("partition blocks must cover the universe");
    std::sort(blocks_.begin(), blocks_.end(), [](const Subset& a, const Subset& b) {
      return a.bits().find_first() < b.bits().find_first();
    });
  }

  const UniverseRef& universe() const { return universe_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<Subset>& blocks() const { return blocks_; }

  bool operator==(const Partition& other) const {
    return same_universe(universe_, other.universe_) && blocks_ == other.blocks_;
  }

 private:
  UniverseRef universe_;
  std::vector<Subset> blocks_;
};

// Either zero or an exact power of two; covers component counts past the
// range of a 64-bit integer.
class DefinableCount {
 public:
  static DefinableCount zero() { return DefinableCount(true, 0); }
  static DefinableCount pow2(std::size_t exponent) { return DefinableCount(false, exponent); }

  bool is_zero() const { return zero_; }

  // Exponent c with value 2^c; only meaningful when not zero.
  std::size_t exponent() const { return exponent_; }

  std::optional<std::uint64_t> as_u64() const {
    if (zero_) return 0;
    if (exponent_ > 63) return std::nullopt;
    return std::uint64_t{1} << exponent_;
  }

  std::string str() const {
    if (zero_) return "0";
    std::string digits = "1";  // little-endian decimal
    for (std::size_t i = 0; i < exponent_; ++i) {
      int carry = 0;
      for (char& d : digits) {
        int v = (d - '0') * 2 + carry;
        d = static_cast<char>('0' + v % 10);
        carry = v / 10;
      }
      if (carry) digits.push_back(static_cast<char>('0' + carry));
    }
    return std::string(digits.rbegin(), digits.rend());
  }

  bool operator==(const DefinableCount& other) const = default;

  friend bool operator==(const DefinableCount& c, std::uint64_t v) {
    auto u = c.as_u64();
    return u.has_value() && *u == v;
  }

 private:
  DefinableCount(bool zero, std::size_t exponent) : zero_(zero), exponent_(exponent) {}

  bool zero_;
  std::size_t exponent_;
};

namespace detail {

// Successor rows packed into single words; only valid for universes that fit
// the naive powerset scan.
inline std::vector<std::uint64_t> row_masks(const Relation& r) {
  std::vector<std::uint64_t> rows(r.size());
  for (Element x = 0; x < r.size(); ++x) rows[x] = r.row(x).low_mask();
  return rows;
}

inline void check_powerset_cap(const Relation& r, std::size_t cap) {
  if (r.size() > cap || r.size() > 63)
    throw std::domain_error("powerset too large: universe has " +
                            std::to_string(r.size()) + " elements (cap " +
                            std::to_string(std::min<std::size_t>(cap, 63)) + ")");
}

enum class FixpointKind { Inner, Outer, Both };

inline SetFamily fixpoint_family(const Relation& r, std::size_t cap, FixpointKind kind) {
  check_powerset_cap(r, cap);
  const std::size_t n = r.size();
  const auto rows = row_masks(r);
  std::vector<Subset> members;
  for (std::uint64_t x_mask = 0; x_mask < (std::uint64_t{1} << n); ++x_mask) {
    bool keep = true;
    if (kind != FixpointKind::Outer) {
      std::uint64_t lower = 0;
      for (std::size_t x = 0; x < n; ++x)
        if ((rows[x] & ~x_mask) == 0) lower |= std::uint64_t{1} << x;
      keep = lower == x_mask;
    }
    if (keep && kind != FixpointKind::Inner) {
      std::uint64_t upper = 0;
      for (std::size_t x = 0; x < n; ++x)
        if (rows[x] & x_mask) upper |= std::uint64_t{1} << x;
      keep = upper == x_mask;
    }
    if (keep) members.push_back(Subset(r.universe(), Bitset::from_mask(n, x_mask)));
  }
  return SetFamily(r.universe(), std::move(members));
}

}  // namespace detail

// Brute-force scans of the full powerset; reject universes over the cap.
inline SetFamily inner_family_naive(const Relation& r, std::size_t cap = kDefaultPowersetCap) {
  return detail::fixpoint_family(r, cap, detail::FixpointKind::Inner);
}

inline SetFamily outer_family_naive(const Relation& r, std::size_t cap = kDefaultPowersetCap) {
  return detail::fixpoint_family(r, cap, detail::FixpointKind::Outer);
}

inline SetFamily definable_family_naive(const Relation& r, std::size_t cap = kDefaultPowersetCap) {
  return detail::fixpoint_family(r, cap, detail::FixpointKind::Both);
}

// Connected components of the undirected graph of the symmetric closure,
// as a partition ordered by minimum element.
inline Partition connected_components(const Relation& r) {
  const Relation s = symmetric_closure(r);
  const std::size_t n = s.size();
  Bitset assigned(n);
  std::vector<Subset> blocks;
  for (Element start = 0; start < n; ++start) {
    if (assigned.test(start)) continue;
    Bitset comp(n);
    comp.set(start);
    Bitset frontier = comp;
    while (frontier.any()) {
      Bitset next(n);
      frontier.for_each([&](Element x) { next |= s.row(x); });
      next &= comp.complemented();
      comp |= next;
      frontier = next;
    }
    assigned |= comp;
    blocks.push_back(Subset(r.universe(), comp));
  }
  return Partition(r.universe(), std::move(blocks));
}

// Empty for non-serial relations; otherwise all unions of the connected
// components of the symmetric closure. Rejects when the family (2^c sets)
// would be too large to hold.
inline SetFamily definable_family_fast(const Relation& r) {
  if (!is_serial(r)) return SetFamily(r.universe());
  const Partition comps = connected_components(r);
  const std::size_t c = comps.block_count();
  if (c > kComponentCap)
    throw std::domain_error("family too large to materialize: " + std::to_string(c) +
                            " components (cap " + std::to_string(kComponentCap) + ")");
  std::vector<Subset> members;
  members.reserve(std::size_t{1} << c);
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << c); ++pick) {
    Bitset acc(r.size());
    for (std::size_t i = 0; i < c; ++i)
      if ((pick >> i) & 1) acc |= comps.blocks()[i].bits();
    members.push_back(Subset(r.universe(), acc));
  }
  return SetFamily(r.universe(), std::move(members));
}

// |definable family| without materializing it: 0 when non-serial, else 2^c
// over the component count c.
inline DefinableCount definable_count(const Relation& r) {
  if (!is_serial(r)) return DefinableCount::zero();
  return DefinableCount::pow2(connected_components(r).block_count());
}

// Quotient set of an equivalence relation, blocks ordered by minimum element.
inline Partition equivalence_classes(const Relation& e) {
  if (!is_equivalence(e))
    throw std::invalid_argument("equivalence classes require an equivalence relation");
  Bitset assigned(e.size());
  std::vector<Subset> blocks;
  for (Element x = 0; x < e.size(); ++x) {
    if (assigned.test(x)) continue;
    assigned |= e.row(x);
    blocks.push_back(Subset(e.universe(), e.row(x)));
  }
  return Partition(e.universe(), std::move(blocks));
}

// Equivalence relation whose classes are exactly the partition's blocks.
inline Relation partition_to_relation(const Partition& p) {
  std::vector<Bitset> rows(p.universe()->size(), Bitset(p.universe()->size()));
  for (const Subset& block : p.blocks())
    block.bits().for_each([&](Element x) { rows[x] = block.bits(); });
  return Relation(p.universe(), std::move(rows));
}

enum class FamilyReason { BothNonSerial, TsClosuresEqual, SerialMismatch, TsClosuresDiffer };

inline std::string to_string(FamilyReason reason) {
  switch (reason) {
    case FamilyReason::BothNonSerial: return "both-non-serial";
    case FamilyReason::TsClosuresEqual: return "ts-closures-equal";
    case FamilyReason::SerialMismatch: return "serial-mismatch";
    case FamilyReason::TsClosuresDiffer: return "ts-closures-differ";
  }
  return "unknown";
}

// Verdict on whether two relations induce the same definable set family.
// The witness, present exactly when both inputs are serial but the verdict is
// negative, is a subset definable under exactly one of the two inputs.
struct EquivalenceReport {
  bool equal;
  FamilyReason reason;
  std::optional<Subset> witness;
};

namespace detail {

// A class of the coarse side that is not a union of classes on the fine side,
// if any. Blocks of an equivalence relation are unions of another equivalence
// relation's blocks iff stepping through the latter never leaves the block.
inline std::optional<Subset> block_outside(const Partition& coarse, const Relation& fine_ts) {
  for (const Subset& block : coarse.blocks())
    if (succ_set(fine_ts, block) != block) return block;
  return std::nullopt;
}

}  // namespace detail

inline EquivalenceReport same_definable_family(const Relation& r1, const Relation& r2) {
  ensure_same_universe(r1.universe(), r2.universe());
  const bool serial1 = is_serial(r1);
  const bool serial2 = is_serial(r2);
  if (!serial1 && !serial2)
    return EquivalenceReport{true, FamilyReason::BothNonSerial, std::nullopt};
  if (serial1 != serial2)
    return EquivalenceReport{false, FamilyReason::SerialMismatch, std::nullopt};

  const Relation ts1 = ts_closure(r1);
  const Relation ts2 = ts_closure(r2);
  if (ts1 == ts2) return EquivalenceReport{true, FamilyReason::TsClosuresEqual, std::nullopt};

  // Both serial with different ts closures: surface a certificate set that is
  // definable on exactly one side.
  std::optional<Subset> witness = detail::block_outside(equivalence_classes(ts1), ts2);
  if (!witness) witness = detail::block_outside(equivalence_classes(ts2), ts1);
  if (!witness)
    throw std::logic_error("distinct ts closures must yield a distinguishing block");
  return EquivalenceReport{false, FamilyReason::TsClosuresDiffer, witness};
}

// For equivalence relations the definable families agree exactly when the
// relations are equal, so the comparison needs no family enumeration.
inline bool equivalence_families_equal(const Relation& e1, const Relation& e2) {
  ensure_same_universe(e1.universe(), e2.universe());
  if (!is_equivalence(e1) || !is_equivalence(e2))
    throw std::invalid_argument("family comparison requires equivalence relations");
  return e1 == e2;
}

}  // namespace roughrel

#endif  // ROUGHREL_DEFINABLE_HPP
