#ifndef ROUGHREL_ORACLE_HPP
#define ROUGHREL_ORACLE_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "roughrel/definable.hpp"

namespace roughrel::oracle {

// SplitMix64: seedable 64-bit generator with a published algorithm, so any
// reimplementation reproduces the same stream bit for bit.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1) with 53 bits of precision.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_double() < p; }

  // Unbiased uniform draw from [0,n), by rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("below(0)");
    std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t x = next();
      if (x >= threshold) return x % n;
    }
  }

 private:
  std::uint64_t state_;
};

// -- relation codes ---------------------------------------------------------
// Cell (x,y) maps to bit x*n+y, so the full space of relations on n elements
// is the integer range [0, 2^(n*n)).

inline std::uint64_t relation_code(const Relation& r) {
  const std::size_t n = r.size();
  if (n * n > 64) throw std::invalid_argument("relation too large to encode");
  std::uint64_t code = 0;
  for (Element x = 0; x < n; ++x)
    r.row(x).for_each([&](Element y) { code |= std::uint64_t{1} << (x * n + y); });
  return code;
}

inline Relation relation_from_code(const UniverseRef& u, std::uint64_t code) {
  const std::size_t n = u->size();
  if (n * n > 64) throw std::invalid_argument("relation too large to encode");
  std::vector<Bitset> rows(n, Bitset(n));
  for (std::size_t bit = 0; bit < n * n; ++bit)
    if ((code >> bit) & 1) rows[bit / n].set(bit % n);
  return Relation(u, std::move(rows));
}

// All 2^(n*n) relations on u, in ascending code order.
class ExhaustiveRelations {
 public:
  explicit ExhaustiveRelations(UniverseRef universe) : universe_(std::move(universe)) {
    const std::size_t n = universe_->size();
    if (n * n > 32)
      throw std::invalid_argument("exhaustive enumeration requires n*n <= 32");
    count_ = std::uint64_t{1} << (n * n);
  }

  std::uint64_t count() const { return count_; }

  class iterator {
   public:
    iterator(const UniverseRef& u, std::uint64_t code) : universe_(&u), code_(code) {}
    Relation operator*() const { return relation_from_code(*universe_, code_); }
    iterator& operator++() { ++code_; return *this; }
    bool operator!=(const iterator& o) const { return code_ != o.code_; }

   private:
    const UniverseRef* universe_;
    std::uint64_t code_;
  };

  iterator begin() const { return iterator(universe_, 0); }
  iterator end() const { return iterator(universe_, count_); }

 private:
  UniverseRef universe_;
  std::uint64_t count_;
};

// -- random generators ------------------------------------------------------

inline Relation random_relation(const UniverseRef& u, double density, SplitMix64& rng) {
  if (density < 0.0 || density > 1.0)
    throw std::invalid_argument("density must lie in [0,1]");
  const std::size_t n = u->size();
  std::vector<Bitset> rows(n, Bitset(n));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (rng.bernoulli(density)) rows[x].set(y);
  return Relation(u, std::move(rows));
}

inline Relation random_relation(std::size_t n, double density, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return random_relation(make_universe(n), density, rng);
}

// Random relation with one uniformly chosen successor forced into every
// otherwise empty row.
inline Relation random_serial_relation(const UniverseRef& u, double density, SplitMix64& rng) {
  Relation base = random_relation(u, density, rng);
  const std::size_t n = u->size();
  std::vector<Bitset> rows;
  rows.reserve(n);
  for (Element x = 0; x < n; ++x) {
    Bitset row = base.row(x);
    if (row.none()) row.set(static_cast<Element>(rng.below(n)));
    rows.push_back(std::move(row));
  }
  return Relation(u, std::move(rows));
}

inline Relation random_serial_relation(std::size_t n, double density, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return random_serial_relation(make_universe(n), density, rng);
}

// Random partition by block growth: each element joins a uniformly chosen
// existing block or starts a new one.
inline Partition random_partition(const UniverseRef& u, SplitMix64& rng) {
  const std::size_t n = u->size();
  std::vector<Bitset> blocks;
  for (Element x = 0; x < n; ++x) {
    std::uint64_t pick = rng.below(blocks.size() + 1);
    if (pick == blocks.size()) blocks.emplace_back(n);
    blocks[pick].set(x);
  }
  std::vector<Subset> subsets;
  subsets.reserve(blocks.size());
  for (Bitset& b : blocks) subsets.push_back(Subset(u, std::move(b)));
  return Partition(u, std::move(subsets));
}

inline Relation random_equivalence_relation(const UniverseRef& u, SplitMix64& rng) {
  return partition_to_relation(random_partition(u, rng));
}

inline Relation random_equivalence_relation(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return random_equivalence_relation(make_universe(n), rng);
}

// -- sweep engine -----------------------------------------------------------

enum class SweepMode { Exhaustive, Random };

inline std::string to_string(SweepMode mode) {
  return mode == SweepMode::Exhaustive ? "exhaustive" : "random";
}

// Instance shape and generation recipe of a claim's quantifier prefix.
enum class GenProfile {
  Any,              // one arbitrary relation
  Symmetric,        // one symmetric relation
  Serial,           // one serial relation
  SerialSymmetric,  // one serial symmetric relation
  Equivalence,      // one equivalence relation
  AnyPair,          // two arbitrary relations
  SubsetPair,       // (r1, r2) with r1 contained in r2
  MixedPair,        // two relations, generation mixes serial/non-serial cases
  EquivalencePair,  // two equivalence relations
  AnyTriple,        // three arbitrary relations
};

inline std::size_t profile_arity(GenProfile p) {
  switch (p) {
    case GenProfile::AnyPair:
    case GenProfile::SubsetPair:
    case GenProfile::MixedPair:
    case GenProfile::EquivalencePair:
      return 2;
    case GenProfile::AnyTriple:
      return 3;
    default:
      return 1;
  }
}

struct Instance {
  std::vector<Relation> relations;
};

// Extra context a checker may attach to a failed instance.
struct FailureDetail {
  std::vector<Subset> subsets;
  std::string note;
};

struct Failure {
  std::vector<Relation> relations;
  std::vector<Subset> subsets;
  std::string note;
};

using InstanceChecker = std::function<bool(const Instance&, FailureDetail&)>;

struct ClaimDef {
  std::string id;
  std::string summary;
  GenProfile profile = GenProfile::Any;
  std::size_t max_n = 0;  // 0 means no claim-specific bound
  std::function<InstanceChecker(const UniverseRef&)> make_checker;
};

class Registry {
 public:
  void add(ClaimDef claim) {
    if (claims_.count(claim.id)) throw std::invalid_argument("duplicate claim id: " + claim.id);
    claims_.emplace(claim.id, std::move(claim));
  }

  const ClaimDef* find(const std::string& id) const {
    auto it = claims_.find(id);
    return it == claims_.end() ? nullptr : &it->second;
  }

  std::vector<std::string> ids() const {
    std::vector<std::string> out;
    out.reserve(claims_.size());
    for (const auto& [id, claim] : claims_) out.push_back(id);
    return out;
  }

  std::size_t size() const { return claims_.size(); }

 private:
  std::map<std::string, ClaimDef> claims_;
};

struct SweepParams {
  std::string claim_id;
  std::size_t n = 3;
  SweepMode mode = SweepMode::Exhaustive;
  std::uint64_t trials = 0;  // random mode only
  std::uint64_t seed = 0;    // random mode only
};

struct SweepReport {
  std::string claim_id;
  SweepMode mode = SweepMode::Exhaustive;
  std::size_t universe_size = 0;
  std::uint64_t trials = 0;  // instances actually checked
  std::vector<Failure> failures;
  std::chrono::milliseconds elapsed{0};

  bool passed() const { return failures.empty(); }
};

// Exhaustive subset quantification is budgeted; past the budget claims fall
// back to a fixed deterministic sample.
inline constexpr std::size_t kSubsetBudget = 12;

inline std::shared_ptr<const std::vector<Subset>> quantified_subsets(const UniverseRef& u) {
  const std::size_t n = u->size();
  auto out = std::make_shared<std::vector<Subset>>();
  if (n <= kSubsetBudget) {
    out->reserve(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
      out->push_back(Subset(u, Bitset::from_mask(n, mask)));
    return out;
  }
  out->push_back(Subset::empty(u));
  out->push_back(Subset::full(u));
  for (Element x = 0; x < n; ++x) {
    out->push_back(Subset::of(u, {x}));
    out->push_back(~Subset::of(u, {x}));
  }
  SplitMix64 rng(0x5b5ebf35u);
  for (int i = 0; i < 2048; ++i) {
    Bitset b(n);
    for (Element x = 0; x < n; ++x)
      if (rng.bernoulli(0.5)) b.set(x);
    out->push_back(Subset(u, std::move(b)));
  }
  return out;
}

namespace detail {

inline const double kDensityCycle[5] = {0.1, 0.3, 0.5, 0.7, 0.9};

inline Relation toggle_random_cell(const Relation& r, SplitMix64& rng) {
  const std::size_t n = r.size();
  Element x = static_cast<Element>(rng.below(n));
  Element y = static_cast<Element>(rng.below(n));
  std::vector<Bitset> rows;
  rows.reserve(n);
  for (Element i = 0; i < n; ++i) rows.push_back(r.row(i));
  if (rows[x].test(y)) rows[x].reset(y); else rows[x].set(y);
  return Relation(r.universe(), std::move(rows));
}

inline Instance random_instance(GenProfile profile, const UniverseRef& u, SplitMix64& rng,
                                std::uint64_t trial) {
  const double d = kDensityCycle[trial % 5];
  Instance in;
  switch (profile) {
    case GenProfile::Any:
      in.relations.push_back(random_relation(u, d, rng));
      break;
    case GenProfile::Symmetric:
      in.relations.push_back(symmetric_closure(random_relation(u, d, rng)));
      break;
    case GenProfile::Serial:
      in.relations.push_back(random_serial_relation(u, d, rng));
      break;
    case GenProfile::SerialSymmetric:
      in.relations.push_back(symmetric_closure(random_serial_relation(u, d, rng)));
      break;
    case GenProfile::Equivalence:
      in.relations.push_back(random_equivalence_relation(u, rng));
      break;
    case GenProfile::AnyPair:
      in.relations.push_back(random_relation(u, d, rng));
      in.relations.push_back(random_relation(u, d, rng));
      break;
    case GenProfile::SubsetPair: {
      Relation r2 = random_relation(u, d, rng);
      Relation r1 = intersection_of(r2, random_relation(u, 0.5, rng));
      in.relations.push_back(std::move(r1));
      in.relations.push_back(std::move(r2));
      break;
    }
    case GenProfile::MixedPair:
      switch (trial % 4) {
        case 0:
          in.relations.push_back(random_relation(u, d, rng));
          in.relations.push_back(random_relation(u, d, rng));
          break;
        case 1: {
          Relation r1 = random_relation(u, d, rng);
          Relation r2 = ts_closure(r1);
          in.relations.push_back(std::move(r1));
          in.relations.push_back(std::move(r2));
          break;
        }
        case 2: {
          Relation r1 = random_relation(u, d, rng);
          Relation r2 = toggle_random_cell(r1, rng);
          in.relations.push_back(std::move(r1));
          in.relations.push_back(std::move(r2));
          break;
        }
        default:
          in.relations.push_back(random_serial_relation(u, d, rng));
          in.relations.push_back(random_serial_relation(u, d, rng));
          break;
      }
      break;
    case GenProfile::EquivalencePair: {
      Relation e1 = random_equivalence_relation(u, rng);
      Relation e2 = (trial % 2 == 0) ? random_equivalence_relation(u, rng) : e1;
      in.relations.push_back(std::move(e1));
      in.relations.push_back(std::move(e2));
      break;
    }
    case GenProfile::AnyTriple:
      in.relations.push_back(random_relation(u, d, rng));
      in.relations.push_back(random_relation(u, d, rng));
      in.relations.push_back(random_relation(u, d, rng));
      break;
  }
  return in;
}

inline bool profile_filter(GenProfile profile, const Relation& r) {
  switch (profile) {
    case GenProfile::Symmetric: return is_symmetric(r);
    case GenProfile::Serial: return is_serial(r);
    case GenProfile::SerialSymmetric: return is_serial(r) && is_symmetric(r);
    case GenProfile::Equivalence: return is_equivalence(r);
    default: return true;
  }
}

// log2 of the exhaustive enumeration cost, used as a feasibility gate. For
// equivalence pairs the filter scan dominates: only Bell(n)^2 pairs survive.
inline double exhaustive_bits(GenProfile profile, std::size_t n) {
  const double cells = static_cast<double>(n * n);
  switch (profile) {
    case GenProfile::AnyPair:
    case GenProfile::MixedPair:
      return 2 * cells;
    case GenProfile::SubsetPair:
      return cells * 1.5849625007211562;  // log2(3) per cell
    case GenProfile::AnyTriple:
      return 3 * cells;
    default:
      return cells;
  }
}

inline constexpr double kExhaustiveBitBudget = 26.0;

template <class Visit>
void exhaustive_instances(GenProfile profile, const UniverseRef& u, Visit visit) {
  const std::size_t n = u->size();
  const std::uint64_t space = std::uint64_t{1} << (n * n);
  Instance in;
  switch (profile) {
    case GenProfile::Any:
    case GenProfile::Symmetric:
    case GenProfile::Serial:
    case GenProfile::SerialSymmetric:
    case GenProfile::Equivalence:
      for (std::uint64_t code = 0; code < space; ++code) {
        Relation r = relation_from_code(u, code);
        if (!profile_filter(profile, r)) continue;
        in.relations.clear();
        in.relations.push_back(std::move(r));
        visit(in);
      }
      break;
    case GenProfile::AnyPair:
    case GenProfile::MixedPair:
      for (std::uint64_t c1 = 0; c1 < space; ++c1)
        for (std::uint64_t c2 = 0; c2 < space; ++c2) {
          in.relations.clear();
          in.relations.push_back(relation_from_code(u, c1));
          in.relations.push_back(relation_from_code(u, c2));
          visit(in);
        }
      break;
    case GenProfile::SubsetPair:
      for (std::uint64_t c2 = 0; c2 < space; ++c2) {
        Relation r2 = relation_from_code(u, c2);
        for (std::uint64_t sub = c2;; sub = (sub - 1) & c2) {
          in.relations.clear();
          in.relations.push_back(relation_from_code(u, sub));
          in.relations.push_back(r2);
          visit(in);
          if (sub == 0) break;
        }
      }
      break;
    case GenProfile::EquivalencePair: {
      std::vector<std::uint64_t> eq_codes;
      for (std::uint64_t code = 0; code < space; ++code)
        if (is_equivalence(relation_from_code(u, code))) eq_codes.push_back(code);
      for (std::uint64_t c1 : eq_codes)
        for (std::uint64_t c2 : eq_codes) {
          in.relations.clear();
          in.relations.push_back(relation_from_code(u, c1));
          in.relations.push_back(relation_from_code(u, c2));
          visit(in);
        }
      break;
    }
    case GenProfile::AnyTriple:
      for (std::uint64_t c1 = 0; c1 < space; ++c1)
        for (std::uint64_t c2 = 0; c2 < space; ++c2)
          for (std::uint64_t c3 = 0; c3 < space; ++c3) {
            in.relations.clear();
            in.relations.push_back(relation_from_code(u, c1));
            in.relations.push_back(relation_from_code(u, c2));
            in.relations.push_back(relation_from_code(u, c3));
            visit(in);
          }
      break;
  }
}

}  // namespace detail

inline SweepReport verify_claim(const Registry& registry, const SweepParams& params) {
  const ClaimDef* claim = registry.find(params.claim_id);
  if (!claim) throw std::invalid_argument("unknown claim id: " + params.claim_id);
  if (params.n == 0) throw std::invalid_argument("universe size must be positive");
  if (claim->max_n != 0 && params.n > claim->max_n)
    throw std::invalid_argument("claim " + claim->id + " supports n <= " +
                                std::to_string(claim->max_n));

  const UniverseRef u = make_universe(params.n);
  InstanceChecker checker = claim->make_checker(u);

  SweepReport report;
  report.claim_id = params.claim_id;
  report.mode = params.mode;
  report.universe_size = params.n;

  const auto started = std::chrono::steady_clock::now();
  auto test = [&](const Instance& in) {
    FailureDetail detail;
    if (!checker(in, detail))
      report.failures.push_back(Failure{in.relations, std::move(detail.subsets),
                                        std::move(detail.note)});
    ++report.trials;
  };

  if (params.mode == SweepMode::Exhaustive) {
    if (params.n * params.n > 32)
      throw std::invalid_argument("exhaustive mode requires n*n <= 32");
    if (detail::exhaustive_bits(claim->profile, params.n) > detail::kExhaustiveBitBudget)
      throw std::invalid_argument("exhaustive space too large for claim " + claim->id +
                                  " at n = " + std::to_string(params.n));
    detail::exhaustive_instances(claim->profile, u, test);
  } else {
    if (params.trials == 0) throw std::invalid_argument("random mode requires trials > 0");
    SplitMix64 rng(params.seed);
    for (std::uint64_t t = 0; t < params.trials; ++t)
      test(detail::random_instance(claim->profile, u, rng, t));
  }

  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  return report;
}

// True when the recorded instance still fails its claim's checker.
inline bool replay_failure(const Registry& registry, const std::string& claim_id,
                           const UniverseRef& u, const Failure& failure) {
  const ClaimDef* claim = registry.find(claim_id);
  if (!claim) throw std::invalid_argument("unknown claim id: " + claim_id);
  if (failure.relations.size() != profile_arity(claim->profile))
    throw std::invalid_argument("failure arity does not match claim " + claim_id);
  InstanceChecker checker = claim->make_checker(u);
  Instance in{failure.relations};
  FailureDetail detail;
  return !checker(in, detail);
}

}  // namespace roughrel::oracle

#endif  // ROUGHREL_ORACLE_HPP
