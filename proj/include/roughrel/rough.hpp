#ifndef ROUGHREL_ROUGH_HPP
#define ROUGHREL_ROUGH_HPP

#include "roughrel/relcore.hpp"

namespace roughrel {

// Union of successor neighborhoods over the members of x_set.
inline Subset succ_set(const Relation& r, const Subset& x_set) {
  ensure_same_universe(r.universe(), x_set.universe());
  Bitset acc(r.size());
  x_set.bits().for_each([&](Element x) { acc |= r.row(x); });
  return Subset(r.universe(), acc);
}

inline Subset pred_set(const Relation& r, const Subset& x_set) {
  ensure_same_universe(r.universe(), x_set.universe());
  Bitset acc(r.size());
  for (Element x = 0; x < r.size(); ++x)
    if (r.row(x).intersects(x_set.bits())) acc.set(x);
  return Subset(r.universe(), acc);
}

// One-step forward-and-backward neighborhood of x_set.
inline Subset v_set(const Relation& r, const Subset& x_set) {
  return succ_set(r, x_set) | pred_set(r, x_set);
}

// Elements whose whole successor neighborhood lies inside x_set.
inline Subset lower_approx(const Relation& r, const Subset& x_set) {
  ensure_same_universe(r.universe(), x_set.universe());
  Bitset acc(r.size());
  for (Element x = 0; x < r.size(); ++x)
    if (r.row(x).is_subset_of(x_set.bits())) acc.set(x);
  return Subset(r.universe(), acc);
}

// Elements whose successor neighborhood meets x_set.
inline Subset upper_approx(const Relation& r, const Subset& x_set) {
  ensure_same_universe(r.universe(), x_set.universe());
  Bitset acc(r.size());
  for (Element x = 0; x < r.size(); ++x)
    if (r.row(x).intersects(x_set.bits())) acc.set(x);
  return Subset(r.universe(), acc);
}

struct ApproxPair {
  Subset lower;
  Subset upper;
};

inline ApproxPair approximations(const Relation& r, const Subset& x_set) {
  return ApproxPair{lower_approx(r, x_set), upper_approx(r, x_set)};
}

inline bool is_inner_definable(const Relation& r, const Subset& x_set) {
  return lower_approx(r, x_set) == x_set;
}

inline bool is_outer_definable(const Relation& r, const Subset& x_set) {
  return upper_approx(r, x_set) == x_set;
}

inline bool is_definable(const Relation& r, const Subset& x_set) {
  return is_inner_definable(r, x_set) && is_outer_definable(r, x_set);
}

}  // namespace roughrel

#endif  // ROUGHREL_ROUGH_HPP
