#ifndef ROUGHREL_CLAIMS_HPP
#define ROUGHREL_CLAIMS_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "roughrel/oracle.hpp"

// Standard claim registry: one checker per verified statement about
// relations, closures, approximations and definable families. Checkers are
// pure predicates over generated instances; anything they quantify beyond the
// instance (subsets, exponents, supersets) is scanned internally.

namespace roughrel::oracle {

namespace claims_detail {

// r ∪ r² ∪ ... ∪ r^kmax, by repeated composition.
inline Relation positive_power_union(const Relation& r, std::size_t kmax) {
  Relation acc = r;
  Relation p = r;
  for (std::size_t k = 2; k <= kmax; ++k) {
    p = compose(p, r);
    acc = union_of(acc, p);
  }
  return acc;
}

// Property bit per relation code; drives superset scans for minimality.
struct PropertyTable {
  std::uint64_t full = 0;
  std::vector<std::uint8_t> has_property;
};

template <class Pred>
std::shared_ptr<const PropertyTable> make_property_table(const UniverseRef& u, Pred pred) {
  auto table = std::make_shared<PropertyTable>();
  const std::size_t bits = u->size() * u->size();
  table->full = (std::uint64_t{1} << bits) - 1;
  table->has_property.resize(std::size_t{1} << bits);
  for (std::uint64_t code = 0; code <= table->full; ++code)
    table->has_property[code] = pred(relation_from_code(u, code)) ? 1 : 0;
  return table;
}

inline bool contained_in_every_property_superset(const PropertyTable& t, std::uint64_t r_code,
                                                 std::uint64_t cand_code, std::uint64_t& bad) {
  for (std::uint64_t m = r_code;; m = (m + 1) | r_code) {
    if (t.has_property[m] && (cand_code & ~m) != 0) {
      bad = m;
      return false;
    }
    if (m == t.full) break;
  }
  return true;
}

// The three closure clauses (target property, containment, minimality) plus
// agreement between an independently built candidate and the library routine.
inline InstanceChecker closure_checker(const UniverseRef& u,
                                       std::function<Relation(const Relation&)> candidate,
                                       std::function<Relation(const Relation&)> library,
                                       std::function<bool(const Relation&)> property) {
  if (u->size() > 4)
    throw std::invalid_argument("closure minimality checker requires n <= 4");
  auto table = make_property_table(u, property);
  return [u, candidate = std::move(candidate), library = std::move(library),
          property = std::move(property), table](const Instance& in, FailureDetail& d) {
    const Relation& r = in.relations[0];
    const Relation cand = candidate(r);
    if (!property(cand)) {
      d.note = "closure misses the target property";
      return false;
    }
    if (!is_subrelation(r, cand)) {
      d.note = "closure does not contain the input";
      return false;
    }
    if (cand != library(r)) {
      d.note = "independent construction and library closure disagree";
      return false;
    }
    std::uint64_t bad = 0;
    if (!contained_in_every_property_superset(*table, relation_code(r), relation_code(cand),
                                              bad)) {
      d.note = "property superset with code " + std::to_string(bad) + " beats the closure";
      return false;
    }
    return true;
  };
}

using SubsetsPtr = std::shared_ptr<const std::vector<Subset>>;

}  // namespace claims_detail

inline Registry make_standard_registry() {
  using namespace claims_detail;
  Registry reg;

  reg.add({"prop-27A1", "relation composition is associative", GenProfile::AnyTriple, 0,
           [](const UniverseRef&) -> InstanceChecker {
             return [](const Instance& in, FailureDetail&) {
               const Relation &a = in.relations[0], &b = in.relations[1], &c = in.relations[2];
               return compose(compose(a, b), c) == compose(a, compose(b, c));
             };
           }});

  reg.add({"thm-29r",
           "joining the identity yields the least reflexive superset", GenProfile::Any, 4,
           [](const UniverseRef& u) {
             return closure_checker(
                 u,
                 [u](const Relation& r) { return union_of(r, identity_relation(u)); },
                 [](const Relation& r) { return reflexive_closure(r); },
                 [](const Relation& r) { return is_reflexive(r); });
           }});

  reg.add({"thm-29s",
           "joining the converse yields the least symmetric superset", GenProfile::Any, 4,
           [](const UniverseRef& u) {
             return closure_checker(
                 u, [](const Relation& r) { return union_of(r, converse(r)); },
                 [](const Relation& r) { return symmetric_closure(r); },
                 [](const Relation& r) { return is_symmetric(r); });
           }});

  reg.add({"thm-29t",
           "the union of all positive powers is the least transitive superset and matches "
           "the Warshall-style closure",
           GenProfile::Any, 4, [](const UniverseRef& u) {
             return closure_checker(
                 u,
                 [u](const Relation& r) { return positive_power_union(r, u->size()); },
                 [](const Relation& r) { return transitive_closure(r); },
                 [](const Relation& r) { return is_transitive(r); });
           }});

  reg.add({"prop-8B7",
           "both mixed closure orders collapse: rts = trs = tsr and rst = str = srt",
           GenProfile::Any, 0, [](const UniverseRef&) -> InstanceChecker {
             return [](const Instance& in, FailureDetail& d) {
               const Relation& x = in.relations[0];
               const Relation rts = reflexive_closure(transitive_closure(symmetric_closure(x)));
               const Relation trs = transitive_closure(reflexive_closure(symmetric_closure(x)));
               const Relation tsr = transitive_closure(symmetric_closure(reflexive_closure(x)));
               const Relation rst = reflexive_closure(symmetric_closure(transitive_closure(x)));
               const Relation str = symmetric_closure(transitive_closure(reflexive_closure(x)));
               const Relation srt = symmetric_closure(reflexive_closure(transitive_closure(x)));
               if (!(rts == trs && trs == tsr)) {
                 d.note = "rts chain differs across orders";
                 return false;
               }
               if (!(rst == str && str == srt)) {
                 d.note = "rst chain differs across orders";
                 return false;
               }
               return true;
             };
           }});

  reg.add({"prop-8B8", "rts is the least equivalence relation containing the input",
           GenProfile::Any, 4, [](const UniverseRef& u) {
             return closure_checker(
                 u,
                 [](const Relation& r) {
                   return reflexive_closure(transitive_closure(symmetric_closure(r)));
                 },
                 [](const Relation& r) { return equivalence_closure(r); },
                 [](const Relation& r) { return is_equivalence(r); });
           }});

  reg.add({"cor-39A3",
           "the equivalence closure is the identity joined with every power of the "
           "symmetric closure",
           GenProfile::Any, 0, [](const UniverseRef& u) -> InstanceChecker {
             return [u](const Instance& in, FailureDetail&) {
               const Relation& r = in.relations[0];
               const Relation s = symmetric_closure(r);
               const Relation formula =
                   union_of(identity_relation(u), positive_power_union(s, u->size()));
               return formula == equivalence_closure(r);
             };
           }});

  reg.add({"prop-28A",
           "membership in the k-th power coincides with a length-k chain witness",
           GenProfile::Any, 0, [](const UniverseRef& u) -> InstanceChecker {
             return [u](const Instance& in, FailureDetail& d) {
               const Relation& r = in.relations[0];
               const std::size_t n = u->size();
               const std::size_t kmax = std::min<std::size_t>(6, n + 2);
               Relation pk = identity_relation(u);
               for (std::size_t k = 1; k <= kmax; ++k) {
                 pk = compose(pk, r);
                 for (Element x = 0; x < n; ++x)
                   for (Element y = 0; y < n; ++y) {
                     auto witness = path_witness(r, k, x, y);
                     if (witness.has_value() != pk.contains(x, y)) {
                       d.note = "power membership and witness existence disagree at k = " +
                                std::to_string(k);
                       return false;
                     }
                     if (!witness) continue;
                     if (witness->size() != k - 1) {
                       d.note = "witness has the wrong length";
                       return false;
                     }
                     Element prev = x;
                     for (Element z : *witness) {
                       if (!r.contains(prev, z)) {
                         d.note = "witness uses a missing pair";
                         return false;
                       }
                       prev = z;
                     }
                     if (!r.contains(prev, y)) {
                       d.note = "witness uses a missing final pair";
                       return false;
                     }
                   }
               }
               return true;
             };
           }});

  reg.add({"lemma-28D",
           "a symmetric relation hits the diagonal of its square exactly at elements with "
           "successors",
           GenProfile::Symmetric, 0, [](const UniverseRef&) -> InstanceChecker {
             return [](const Instance& in, FailureDetail&) {
               const Relation& r = in.relations[0];
               if (!is_symmetric(r)) return true;
               const Relation square = compose(r, r);
               for (Element x = 0; x < r.size(); ++x)
                 if (square.contains(x, x) != r.row(x).any()) return false;
               return true;
             };
           }});

  reg.add({"lemma-28E",
           "for symmetric relations a diagonal hit in any power forces one at the square; "
           "the per-exponent equality is checked in its exists form because odd powers of "
           "a two-cycle miss the diagonal",
           GenProfile::Symmetric, 0, [](const UniverseRef& u) -> InstanceChecker {
             return [u](const Instance& in, FailureDetail& d) {
               const Relation& r = in.relations[0];
               if (!is_symmetric(r)) return true;
               const std::size_t n = u->size();
               const Relation square = compose(r, r);
               std::vector<bool> any_diag(n, false);
               Relation pk = identity_relation(u);
               for (std::size_t k = 1; k <= 6; ++k) {
                 pk = compose(pk, r);
                 for (Element x = 0; x < n; ++x) {
                   if (!pk.contains(x, x)) continue;
                   any_diag[x] = true;
                   if (!square.contains(x, x)) {
                     d.note = "diagonal hit at k = " + std::to_string(k) +
                              " without one at the square";
                     return false;
                   }
                 }
               }
               for (Element x = 0; x < n; ++x)
                 if (square.contains(x, x) && !any_diag[x]) {
                   d.note = "square diagonal hit missing from the power scan";
                   return false;
                 }
               return true;
             };
           }});

  reg.add({"lemma-28F", "successor neighborhoods distribute over relation union",
           GenProfile::AnyPair, 0, [](const UniverseRef&) -> InstanceChecker {
             return [](const Instance& in, FailureDetail&) {
               const Relation &a = in.relations[0], &b = in.relations[1];
               const Relation joined = union_of(a, b);
               for (Element x = 0; x < a.size(); ++x)
                 if (joined.row(x) != (a.row(x) | b.row(x))) return false;
               return true;
             };
           }});

  reg.add({"prop-39A1",
           "successor and predecessor neighborhoods grow monotonically with the relation "
           "(subscripts read in their evident intended form)",
           GenProfile::SubsetPair, 0, [](const UniverseRef&) -> InstanceChecker {
             return [](const Instance& in, FailureDetail&) {
               const Relation &r1 = in.relations[0], &r2 = in.relations[1];
               if (!is_subrelation(r1, r2)) return true;
               for (Element x = 0; x < r1.size(); ++x) {
                 if (!r1.row(x).is_subset_of(r2.row(x))) return false;
                 if (!r1.column(x).is_subset_of(r2.column(x))) return false;
               }
               return true;
             };
           }});

  reg.add({"thm-39A7",
           "the equivalence closure equals the ts closure exactly when no element is "
           "isolated",
           GenProfile::Any, 0, [](const UniverseRef&) -> InstanceChecker {
             return [](const Instance& in, FailureDetail&) {
               const Relation& r = in.relations[0];
               const bool condition = no_isolated_elements(r);
               const bool closures_equal = equivalence_closure(r) == ts_closure(r);
               return condition == closures_equal;
             };
           }});

  reg.add({"cor-39A5",
           "for serial relations the equivalence closure collapses to the ts closure and "
           "its power-union formula",
           GenProfile::Serial, 0, [](const UniverseRef& u) -> InstanceChecker {
             return [u](const Instance& in, FailureDetail&) {
               const Relation& r = in.relations[0];
               if (!is_serial(r)) return true;
               const Relation ts = ts_closure(r);
               if (equivalence_closure(r) != ts) return false;
               return ts == positive_power_union(symmetric_closure(r), u->size());
             };
           }});

  reg.add({"thm-32A", "the definable family is nonempty exactly for serial relations",
           GenProfile::Any, 0, [](const UniverseRef& u) -> InstanceChecker {
             auto subsets = quantified_subsets(u);
             return [u, subsets](const Instance& in, FailureDetail& d) {
               const Relation& r = in.relations[0];
               if (is_serial(r)) {
                 if (!is_definable(r, Subset::empty(u))) {
                   d.note = "serial relation fails to make the empty set definable";
                   return false;
                 }
                 return true;
               }
               for (const Subset& x : *subsets)
                 if (is_definable(r, x)) {
                   d.subsets.push_back(x);
                   d.note = "non-serial relation has a definable set";
                   return false;
                 }
               return true;
             };
           }});

  reg.add({"prop-44",
           "equal inner and outer families force seriality, certified through the whole "
           "universe on the contrapositive side",
           GenProfile::Any, 0, [](const UniverseRef& u) -> InstanceChecker {
             return [u](const Instance& in, FailureDetail& d) {
               const Relation& r = in.relations[0];
               if (is_serial(r)) return true;
               const Subset whole = Subset::full(u);
               if (!is_inner_definable(r, whole) || is_outer_definable(r, whole)) {
                 d.subsets.push_back(whole);
                 d.note = "whole universe fails to separate the families";
                 return false;
               }
               return true;
             };
           }});

  reg.add({"def-8",
           "bulk successor, predecessor and both-way neighborhoods match their "
           "element-wise unions and the converse duality",
           GenProfile::Any, 0, [](const UniverseRef& u) -> InstanceChecker {
             auto subsets = quantified_subsets(u);
             return [u, subsets](const Instance& in, FailureDetail& d) {
               const Relation& r = in.relations[0];
               const Relation conv = converse(r);
               for (const Subset& x : *subsets) {
                 const Subset s = succ_set(r, x);
                 const Subset p = pred_set(r, x);
                 Subset s_fold = Subset::empty(u);
                 Subset p_fold = Subset::empty(u);
                 x.bits().for_each([&](Element e) {
                   s_fold = s_fold | successor(r, e);
                   p_fold = p_fold | predecessor(r, e);
                 });
                 if (s != s_fold || p != p_fold || p != succ_set(conv, x) ||
                     v_set(r, x) != (s | p)) {
                   d.subsets.push_back(x);
                   d.note = "bulk neighborhood disagrees with its definition";
                   return false;
                 }
               }
               return true;
             };
           }});

  reg.add({"prop-8A6",
           "lower/upper fixpoint inclusions coincide with bulk-neighborhood containment",
           GenProfile::Any, 0, [](const UniverseRef& u) -> InstanceChecker {
             auto subsets = quantified_subsets(u);
             return [subsets](const Instance& in, FailureDetail& d) {
               const Relation& r = in.relations[0];
               for (const Subset& x : *subsets) {
                 const Subset lower = lower_approx(r, x);
                 const Subset upper = upper_approx(r, x);
                 const bool b1 = is_subset(x, lower) == is_subset(succ_set(r, x), x);
                 const bool b2 = is_subset(upper, x) == is_subset(pred_set(r, x), x);
                 const bool b3 = (is_subset(upper, x) && is_subset(x, lower)) ==
                                 is_subset(v_set(r, x), x);
                 if (!(b1 && b2 && b3)) {
                   d.subsets.push_back(x);
                   return false;
                 }
               }
               return true;
             };
           }});

  reg.add({"prop-8A3",
           "for serial relations a set is definable exactly when its both-way "
           "neighborhood stays inside it",
           GenProfile::Serial, 0, [](const UniverseRef& u) -> InstanceChecker {
             auto subsets = quantified_subsets(u);
             return [subsets](const Instance& in, FailureDetail& d) {
               const Relation& r = in.relations[0];
               if (!is_serial(r)) return true;
               for (const Subset& x : *subsets)
                 if (is_definable(r, x) != is_subset(v_set(r, x), x)) {
                   d.subsets.push_back(x);
                   return false;
                 }
               return true;
             };
           }});

  reg.add({"prop-17A",
           "for serial relations both-way-neighborhood containment collapses to equality",
           GenProfile::Serial, 0, [](const UniverseRef& u) -> InstanceChecker {
             auto subsets = quantified_subsets(u);
             return [subsets](const Instance& in, FailureDetail& d) {
               const Relation& r = in.relations[0];
               if (!is_serial(r)) return true;
               for (const Subset& x : *subsets) {
                 const Subset v = v_set(r, x);
                 if ((v == x) != is_subset(v, x)) {
                   d.subsets.push_back(x);
                   return false;
                 }
               }
               return true;
             };
           }});

  reg.add({"prop-8A4",
           "for serial relations a set is definable exactly when it equals its both-way "
           "neighborhood",
           GenProfile::Serial, 0, [](const UniverseRef& u) -> InstanceChecker {
             auto subsets = quantified_subsets(u);
             return [subsets](const Instance& in, FailureDetail& d) {
               const Relation& r = in.relations[0];
               if (!is_serial(r)) return true;
               for (const Subset& x : *subsets)
                 if (is_definable(r, x) != (v_set(r, x) == x)) {
                   d.subsets.push_back(x);
                   return false;
                 }
               return true;
             };
           }});

  reg.add({"prop-32B", "inner definability of a set is outer definability of its complement",
           GenProfile::Any, 0, [](const UniverseRef& u) -> InstanceChecker {
             auto subsets = quantified_subsets(u);
             return [subsets](const Instance& in, FailureDetail& d) {
               const Relation& r = in.relations[0];
               for (const Subset& x : *subsets)
                 if (is_inner_definable(r, x) != is_outer_definable(r, ~x)) {
                   d.subsets.push_back(x);
                   return false;
                 }
               return true;
             };
           }});

  reg.add({"prop-32B11", "definability is closed under complement", GenProfile::Any, 0,
           [](const UniverseRef& u) -> InstanceChecker {
             auto subsets = quantified_subsets(u);
             return [subsets](const Instance& in, FailureDetail& d) {
               const Relation& r = in.relations[0];
               for (const Subset& x : *subsets)
                 if (is_definable(r, x) != is_definable(r, ~x)) {
                   d.subsets.push_back(x);
                   return false;
                 }
               return true;
             };
           }});

  reg.add({"prop-8B4",
           "for serial relations, forward invariance always forcing backward invariance "
           "makes the inner and outer families equal (sufficiency only; the converse has "
           "a recorded counterexample)",
           GenProfile::Serial, 0, [](const UniverseRef& u) -> InstanceChecker {
             auto subsets = quantified_subsets(u);
             return [subsets](const Instance& in, FailureDetail& d) {
               const Relation& r = in.relations[0];
               if (!is_serial(r)) return true;
               for (const Subset& x : *subsets)
                 if (is_subset(succ_set(r, x), x) && !is_subset(pred_set(r, x), x))
                   return true;  // hypothesis fails; nothing to conclude
               for (const Subset& x : *subsets)
                 if (is_inner_definable(r, x) != is_outer_definable(r, x)) {
                   d.subsets.push_back(x);
                   return false;
                 }
               return true;
             };
           }});

  reg.add({"lemma-8B5",
           "symmetric relations have equal bulk successor and predecessor neighborhoods",
           GenProfile::Symmetric, 0, [](const UniverseRef& u) -> InstanceChecker {
             auto subsets = quantified_subsets(u);
             return [subsets](const Instance& in, FailureDetail& d) {
               const Relation& r = in.relations[0];
               if (!is_symmetric(r)) return true;
               for (const Subset& x : *subsets)
                 if (succ_set(r, x) != pred_set(r, x)) {
                   d.subsets.push_back(x);
                   return false;
                 }
               return true;
             };
           }});

  reg.add({"prop-8B6", "serial symmetric relations have equal inner and outer families",
           GenProfile::SerialSymmetric, 0, [](const UniverseRef& u) -> InstanceChecker {
             auto subsets = quantified_subsets(u);
             return [subsets](const Instance& in, FailureDetail& d) {
               const Relation& r = in.relations[0];
               if (!is_serial(r) || !is_symmetric(r)) return true;
               for (const Subset& x : *subsets)
                 if (is_inner_definable(r, x) != is_outer_definable(r, x)) {
                   d.subsets.push_back(x);
                   return false;
                 }
               return true;
             };
           }});

  reg.add({"prop-3A",
           "for serial relations the lower approximation is contained in the upper",
           GenProfile::Serial, 0, [](const UniverseRef& u) -> InstanceChecker {
             auto subsets = quantified_subsets(u);
             return [subsets](const Instance& in, FailureDetail& d) {
               const Relation& r = in.relations[0];
               if (!is_serial(r)) return true;
               for (const Subset& x : *subsets)
                 if (!is_subset(lower_approx(r, x), upper_approx(r, x))) {
                   d.subsets.push_back(x);
                   return false;
                 }
               return true;
             };
           }});

  reg.add({"prop-4", "lower and upper approximations are complement-dual", GenProfile::Any,
           0, [](const UniverseRef& u) -> InstanceChecker {
             auto subsets = quantified_subsets(u);
             return [subsets](const Instance& in, FailureDetail& d) {
               const Relation& r = in.relations[0];
               for (const Subset& x : *subsets) {
                 if (upper_approx(r, x) != ~lower_approx(r, ~x) ||
                     lower_approx(r, x) != ~upper_approx(r, ~x)) {
                   d.subsets.push_back(x);
                   return false;
                 }
               }
               return true;
             };
           }});

  reg.add({"lemma-39A9",
           "definable sets of serial relations absorb single forward or backward steps",
           GenProfile::Serial, 0, [](const UniverseRef& u) -> InstanceChecker {
             auto subsets = quantified_subsets(u);
             return [subsets](const Instance& in, FailureDetail& d) {
               const Relation& r = in.relations[0];
               if (!is_serial(r)) return true;
               for (const Subset& x : *subsets) {
                 if (!is_definable(r, x)) continue;
                 bool ok = true;
                 x.bits().for_each([&](Element e) {
                   if (ok && !(r.row(e) | r.column(e)).is_subset_of(x.bits())) ok = false;
                 });
                 if (!ok) {
                   d.subsets.push_back(x);
                   return false;
                 }
               }
               return true;
             };
           }});

  reg.add({"lemma-39A",
           "definable sets of serial relations absorb every finite forward/backward walk",
           GenProfile::Serial, 0, [](const UniverseRef& u) -> InstanceChecker {
             auto subsets = quantified_subsets(u);
             return [subsets](const Instance& in, FailureDetail& d) {
               const Relation& r = in.relations[0];
               if (!is_serial(r)) return true;
               const Partition comps = connected_components(r);
               for (const Subset& x : *subsets) {
                 if (!is_definable(r, x)) continue;
                 for (const Subset& block : comps.blocks())
                   if (block.bits().intersects(x.bits()) &&
                       !block.bits().is_subset_of(x.bits())) {
                     d.subsets.push_back(x);
                     return false;
                   }
               }
               return true;
             };
           }});

  reg.add({"thm-40B",
           "a serial relation and its ts closure induce the same definable family",
           GenProfile::Serial, 0, [](const UniverseRef& u) -> InstanceChecker {
             auto subsets = quantified_subsets(u);
             return [subsets](const Instance& in, FailureDetail& d) {
               const Relation& r = in.relations[0];
               if (!is_serial(r)) return true;
               const Relation ts = ts_closure(r);
               for (const Subset& x : *subsets)
                 if (is_definable(r, x) != is_definable(ts, x)) {
                   d.subsets.push_back(x);
                   return false;
                 }
               return true;
             };
           }});

  reg.add({"prop-40B1",
           "equivalence relations induce equal definable families exactly when they are "
           "equal",
           GenProfile::EquivalencePair, 0, [](const UniverseRef& u) -> InstanceChecker {
             auto subsets = quantified_subsets(u);
             return [subsets](const Instance& in, FailureDetail& d) {
               const Relation &e1 = in.relations[0], &e2 = in.relations[1];
               if (!is_equivalence(e1) || !is_equivalence(e2)) return true;
               const bool relations_equal = e1 == e2;
               if (equivalence_families_equal(e1, e2) != relations_equal) {
                 d.note = "library comparison disagrees with relation equality";
                 return false;
               }
               if (relations_equal) {
                 for (const Subset& x : *subsets)
                   if (is_definable(e1, x) != is_definable(e2, x)) {
                     d.subsets.push_back(x);
                     d.note = "equal relations with diverging definability";
                     return false;
                   }
                 return true;
               }
               std::optional<Subset> w =
                   roughrel::detail::block_outside(equivalence_classes(e1), e2);
               if (!w) w = roughrel::detail::block_outside(equivalence_classes(e2), e1);
               if (!w) {
                 d.note = "distinct equivalences without a distinguishing class";
                 return false;
               }
               if (is_definable(e1, *w) == is_definable(e2, *w)) {
                 d.subsets.push_back(*w);
                 d.note = "distinguishing class is not one-sided definable";
                 return false;
               }
               return true;
             };
           }});

  reg.add({"thm-40B2",
           "two relations induce the same definable family iff both are non-serial, or "
           "both are serial with equal ts closures; negative verdicts carry a one-sided "
           "definable witness",
           GenProfile::MixedPair, 0, [](const UniverseRef& u) -> InstanceChecker {
             auto subsets = quantified_subsets(u);
             return [u, subsets](const Instance& in, FailureDetail& d) {
               const Relation &r1 = in.relations[0], &r2 = in.relations[1];
               const EquivalenceReport report = same_definable_family(r1, r2);
               const bool s1 = is_serial(r1), s2 = is_serial(r2);

               bool reason_ok = false;
               switch (report.reason) {
                 case FamilyReason::BothNonSerial:
                   reason_ok = !s1 && !s2 && report.equal;
                   break;
                 case FamilyReason::SerialMismatch:
                   reason_ok = (s1 != s2) && !report.equal;
                   break;
                 case FamilyReason::TsClosuresEqual:
                   reason_ok = s1 && s2 && report.equal;
                   break;
                 case FamilyReason::TsClosuresDiffer:
                   reason_ok = s1 && s2 && !report.equal;
                   break;
               }
               if (!reason_ok) {
                 d.note = "reason code inconsistent with the inputs";
                 return false;
               }
               if (report.witness.has_value() != (!report.equal && s1 && s2)) {
                 d.note = "witness presence breaks its contract";
                 return false;
               }

               if (report.equal) {
                 for (const Subset& x : *subsets)
                   if (is_definable(r1, x) != is_definable(r2, x)) {
                     d.subsets.push_back(x);
                     d.note = "equal verdict contradicted by a subset";
                     return false;
                   }
                 return true;
               }
               if (s1 != s2) {
                 const Subset empty = Subset::empty(u);
                 const bool d1 = is_definable(r1, empty), d2 = is_definable(r2, empty);
                 if (d1 == d2) {
                   d.note = "empty set fails to separate a serial/non-serial pair";
                   return false;
                 }
                 return true;
               }
               const bool d1 = is_definable(r1, *report.witness);
               const bool d2 = is_definable(r2, *report.witness);
               if (d1 == d2) {
                 d.subsets.push_back(*report.witness);
                 d.note = "witness is not definable under exactly one input";
                 return false;
               }
               return true;
             };
           }});

  reg.add({"thm-A7",
           "quotient construction and block-relation construction invert each other "
           "between equivalence relations and partitions",
           GenProfile::Equivalence, 0, [](const UniverseRef&) -> InstanceChecker {
             return [](const Instance& in, FailureDetail& d) {
               const Relation& e = in.relations[0];
               if (!is_equivalence(e)) return true;
               const Partition p = equivalence_classes(e);
               if (partition_to_relation(p) != e) {
                 d.note = "rebuilding the relation from its classes changed it";
                 return false;
               }
               if (equivalence_classes(partition_to_relation(p)) != p) {
                 d.note = "rebuilding the partition from its relation changed it";
                 return false;
               }
               return true;
             };
           }});

  return reg;
}

inline const Registry& standard_registry() {
  static const Registry registry = make_standard_registry();
  return registry;
}

inline SweepReport verify_claim(const SweepParams& params) {
  return verify_claim(standard_registry(), params);
}

}  // namespace roughrel::oracle

#endif  // ROUGHREL_CLAIMS_HPP
