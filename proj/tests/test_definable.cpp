#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace roughrel;
using test::rel;
using test::set_of;

TEST_CASE("set families keep a canonical order", "[definable]") {
  auto u = make_universe(3);
  // members given out of order; low bitmask values come first, bit 0 = element 0
  SetFamily family(u, {Subset::full(u), set_of(u, {3}), Subset::empty(u), set_of(u, {1, 2})});
  REQUIRE(family.size() == 4);
  CHECK(family[0] == Subset::empty(u));
  CHECK(family[1] == set_of(u, {1, 2}));  // mask 0b011 before mask 0b100
  CHECK(family[2] == set_of(u, {3}));
  CHECK(family[3] == Subset::full(u));

  CHECK(family.contains(set_of(u, {3})));
  CHECK_FALSE(family.contains(set_of(u, {1})));

  // order-insensitive equality through canonicalization
  SetFamily same(u, {Subset::empty(u), set_of(u, {1, 2}), set_of(u, {3}), Subset::full(u)});
  CHECK(family == same);

  CHECK_THROWS_AS(SetFamily(u, {Subset::empty(u), Subset::empty(u)}), std::invalid_argument);
}

TEST_CASE("naive family enumeration on the worked examples", "[definable]") {
  auto u = make_universe(3);
  Relation r = rel(u, {{1, 2}, {3, 3}});
  CHECK(definable_family_naive(r).is_empty());

  Relation ts = ts_closure(r);
  SetFamily expected(u, {Subset::empty(u), set_of(u, {1, 2}), set_of(u, {3}), Subset::full(u)});
  CHECK(definable_family_naive(ts) == expected);

  Relation witness = rel(u, {{1, 1}, {1, 2}, {2, 1}, {3, 2}});
  SetFamily trivial(u, {Subset::empty(u), Subset::full(u)});
  CHECK(inner_family_naive(witness) == trivial);
  CHECK(outer_family_naive(witness) == trivial);
}

TEST_CASE("naive enumeration rejects oversized powersets", "[definable]") {
  auto big = make_universe(21);
  CHECK_THROWS_WITH(definable_family_naive(Relation::empty(big)),
                    Catch::Matchers::ContainsSubstring("powerset too large"));
  auto small = make_universe(5);
  CHECK_THROWS_AS(inner_family_naive(Relation::empty(small), 4), std::domain_error);
  CHECK_NOTHROW(inner_family_naive(Relation::empty(small), 5));
}

TEST_CASE("every subset is definable under the identity", "[definable]") {
  auto u = make_universe(5);
  Relation id = identity_relation(u);
  CHECK(definable_family_naive(id).size() == 32);
  CHECK(definable_count(id) == std::uint64_t{32});
}

TEST_CASE("component partition of the symmetric closure", "[definable]") {
  auto u = make_universe(4);
  Relation r = rel(u, {{1, 2}, {2, 1}, {3, 4}, {4, 3}});
  Partition comps = connected_components(r);
  REQUIRE(comps.block_count() == 2);
  CHECK(comps.blocks()[0] == set_of(u, {1, 2}));
  CHECK(comps.blocks()[1] == set_of(u, {3, 4}));

  // directed edges still glue components through the symmetric closure
  Relation chain = rel(u, {{1, 2}, {2, 3}});
  Partition chain_comps = connected_components(chain);
  REQUIRE(chain_comps.block_count() == 2);
  CHECK(chain_comps.blocks()[0] == set_of(u, {1, 2, 3}));
  CHECK(chain_comps.blocks()[1] == set_of(u, {4}));
}

TEST_CASE("fast family enumeration", "[definable]") {
  auto u = make_universe(4);
  Relation r = rel(u, {{1, 2}, {2, 1}, {3, 4}, {4, 3}});
  SetFamily expected(u, {Subset::empty(u), set_of(u, {1, 2}), set_of(u, {3, 4}),
                         Subset::full(u)});
  CHECK(definable_family_fast(r) == expected);
  CHECK(definable_family_fast(r) == definable_family_naive(r));

  Relation nonserial = rel(u, {{1, 2}});
  CHECK(definable_family_fast(nonserial).is_empty());

  Relation one_component = rel(u, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  REQUIRE(is_serial(one_component));
  CHECK(definable_family_fast(one_component) ==
        SetFamily(u, {Subset::empty(u), Subset::full(u)}));
}

TEST_CASE("fast family matches the brute-force oracle", "[definable]") {
  for (auto r : oracle::ExhaustiveRelations(make_universe(3)))
    CHECK(definable_family_fast(r) == definable_family_naive(r));

  oracle::SplitMix64 rng(41);
  const double densities[3] = {0.1, 0.3, 0.7};
  for (std::size_t n = 4; n <= 10; ++n) {
    auto u = make_universe(n);
    for (int t = 0; t < 300; ++t) {
      Relation r = oracle::random_relation(u, densities[t % 3], rng);
      CHECK(definable_family_fast(r) == definable_family_naive(r));
    }
  }
}

TEST_CASE("fast enumeration refuses to materialize huge families", "[definable]") {
  auto u = make_universe(21);
  Relation id = identity_relation(u);  // 21 singleton components
  CHECK_THROWS_WITH(definable_family_fast(id),
                    Catch::Matchers::ContainsSubstring("family too large"));
  // the count is still available
  CHECK(definable_count(id) == DefinableCount::pow2(21));
}

TEST_CASE("definable counts", "[definable]") {
  auto u = make_universe(3);
  Relation r = rel(u, {{1, 2}, {3, 3}});
  CHECK(definable_count(r).is_zero());
  CHECK(definable_count(r).str() == "0");
  CHECK(definable_count(ts_closure(r)) == std::uint64_t{4});

  CHECK(DefinableCount::pow2(0) == std::uint64_t{1});
  CHECK(DefinableCount::pow2(10).str() == "1024");
  CHECK_FALSE(DefinableCount::pow2(70).as_u64().has_value());
  CHECK(DefinableCount::pow2(70).str() == "1180591620717411303424");

  oracle::SplitMix64 rng(42);
  for (int t = 0; t < 200; ++t) {
    auto w = make_universe(1 + t % 8);
    Relation q = oracle::random_relation(w, 0.3, rng);
    CHECK(definable_count(q) ==
          static_cast<std::uint64_t>(definable_family_naive(q).size()));
  }
}

TEST_CASE("equivalence classes form the quotient partition", "[definable]") {
  auto u = make_universe(3);
  Partition singletons = equivalence_classes(identity_relation(u));
  REQUIRE(singletons.block_count() == 3);
  CHECK(singletons.blocks()[0] == set_of(u, {1}));

  Relation ts = ts_closure(rel(u, {{1, 2}, {3, 3}}));
  Partition p = equivalence_classes(ts);
  REQUIRE(p.block_count() == 2);
  CHECK(p.blocks()[0] == set_of(u, {1, 2}));
  CHECK(p.blocks()[1] == set_of(u, {3}));

  CHECK(equivalence_classes(Relation::full(u)).block_count() == 1);

  CHECK_THROWS_AS(equivalence_classes(rel(u, {{1, 2}})), std::invalid_argument);
}

TEST_CASE("partitions validate their invariants", "[definable]") {
  auto u = make_universe(3);
  CHECK_THROWS_AS(Partition(u, {Subset::full(u), Subset::empty(u)}), std::invalid_argument);
  CHECK_THROWS_AS(Partition(u, {set_of(u, {1, 2}), set_of(u, {2, 3})}), std::invalid_argument);
  CHECK_THROWS_AS(Partition(u, {set_of(u, {1, 2})}), std::invalid_argument);
  CHECK_NOTHROW(Partition(u, {set_of(u, {3}), set_of(u, {1, 2})}));
}

TEST_CASE("partitions and equivalence relations are interchangeable", "[definable]") {
  auto u = make_universe(3);
  Partition p(u, {set_of(u, {1, 2}), set_of(u, {3})});
  CHECK(partition_to_relation(p) == rel(u, {{1, 1}, {2, 2}, {3, 3}, {1, 2}, {2, 1}}));

  Partition all_singletons(u, {set_of(u, {1}), set_of(u, {2}), set_of(u, {3})});
  CHECK(partition_to_relation(all_singletons) == identity_relation(u));

  oracle::SplitMix64 rng(43);
  for (int t = 0; t < 200; ++t) {
    auto w = make_universe(1 + t % 10);
    Partition q = oracle::random_partition(w, rng);
    Relation e = partition_to_relation(q);
    REQUIRE(is_equivalence(e));
    CHECK(equivalence_classes(e) == q);
    CHECK(partition_to_relation(equivalence_classes(e)) == e);
  }
}

TEST_CASE("family equality verdicts on the worked example", "[definable]") {
  auto u = make_universe(3);
  Relation r = rel(u, {{1, 2}, {3, 3}});
  Relation ts = ts_closure(r);

  EquivalenceReport report = same_definable_family(r, ts);
  CHECK_FALSE(report.equal);
  CHECK(report.reason == FamilyReason::SerialMismatch);
  CHECK_FALSE(report.witness.has_value());
  CHECK(definable_family_naive(r).size() == 0);
  CHECK(definable_family_naive(ts).size() == 4);
}

TEST_CASE("family equality verdicts across the reason space", "[definable]") {
  auto u = make_universe(3);

  Relation r = rel(u, {{1, 2}, {3, 3}});
  EquivalenceReport self = same_definable_family(r, r);
  CHECK(self.equal);
  CHECK(self.reason == FamilyReason::BothNonSerial);

  oracle::SplitMix64 rng(44);
  for (int t = 0; t < 60; ++t) {
    auto w = make_universe(2 + t % 6);
    Relation s = oracle::random_serial_relation(w, 0.3, rng);
    EquivalenceReport rep = same_definable_family(s, ts_closure(s));
    CHECK(rep.equal);
    CHECK(rep.reason == FamilyReason::TsClosuresEqual);
  }

  Relation e1 = partition_to_relation(Partition(u, {set_of(u, {1, 2}), set_of(u, {3})}));
  Relation e2 = partition_to_relation(Partition(u, {set_of(u, {1}), set_of(u, {2, 3})}));
  EquivalenceReport diff = same_definable_family(e1, e2);
  CHECK_FALSE(diff.equal);
  CHECK(diff.reason == FamilyReason::TsClosuresDiffer);
  REQUIRE(diff.witness.has_value());
  CHECK(is_definable(e1, *diff.witness) != is_definable(e2, *diff.witness));

  CHECK_THROWS_AS(same_definable_family(r, Relation::empty(make_universe(4))),
                  std::invalid_argument);
}

TEST_CASE("witnesses certify differing serial pairs", "[definable]") {
  oracle::SplitMix64 rng(45);
  int found = 0;
  for (int t = 0; t < 400; ++t) {
    auto u = make_universe(2 + t % 7);
    Relation r1 = oracle::random_serial_relation(u, 0.3, rng);
    Relation r2 = oracle::random_serial_relation(u, 0.3, rng);
    EquivalenceReport rep = same_definable_family(r1, r2);
    if (rep.equal) continue;
    ++found;
    REQUIRE(rep.reason == FamilyReason::TsClosuresDiffer);
    REQUIRE(rep.witness.has_value());
    CHECK(is_definable(r1, *rep.witness) != is_definable(r2, *rep.witness));
  }
  CHECK(found >= 50);  // generator must actually exercise the witness path
}

TEST_CASE("verdicts agree with brute-force family comparison", "[definable]") {
  auto u = make_universe(3);
  for (auto r1 : oracle::ExhaustiveRelations(u)) {
    // sample the second side to keep the square manageable
    oracle::SplitMix64 rng(oracle::relation_code(r1));
    for (int t = 0; t < 8; ++t) {
      Relation r2 = oracle::random_relation(u, 0.3 + 0.1 * (t % 5), rng);
      bool naive_equal = definable_family_naive(r1) == definable_family_naive(r2);
      CHECK(same_definable_family(r1, r2).equal == naive_equal);
    }
  }
}

TEST_CASE("family comparison of equivalence relations reduces to equality", "[definable]") {
  auto u = make_universe(3);
  CHECK(equivalence_families_equal(identity_relation(u), identity_relation(u)));

  Relation e1 = partition_to_relation(Partition(u, {set_of(u, {1, 2}), set_of(u, {3})}));
  Relation e2 = partition_to_relation(Partition(u, {set_of(u, {1}), set_of(u, {2, 3})}));
  CHECK_FALSE(equivalence_families_equal(e1, e2));
  CHECK(definable_family_naive(e1) ==
        SetFamily(u, {Subset::empty(u), set_of(u, {1, 2}), set_of(u, {3}), Subset::full(u)}));
  CHECK(definable_family_naive(e2) ==
        SetFamily(u, {Subset::empty(u), set_of(u, {1}), set_of(u, {2, 3}), Subset::full(u)}));

  CHECK_THROWS_AS(equivalence_families_equal(e1, rel(u, {{1, 2}})), std::invalid_argument);

  oracle::SplitMix64 rng(46);
  for (int t = 0; t < 200; ++t) {
    auto w = make_universe(2 + t % 7);
    Relation a = oracle::random_equivalence_relation(w, rng);
    Relation b = (t % 3 == 0) ? a : oracle::random_equivalence_relation(w, rng);
    bool naive_equal = definable_family_naive(a) == definable_family_naive(b);
    CHECK(equivalence_families_equal(a, b) == naive_equal);
    CHECK(equivalence_families_equal(a, b) == (a == b));
  }
}

TEST_CASE("nonempty families characterize serial relations", "[definable]") {
  for (auto r : oracle::ExhaustiveRelations(make_universe(3))) {
    CHECK(definable_family_naive(r).is_empty() != is_serial(r));
    if (inner_family_naive(r) == outer_family_naive(r)) CHECK(is_serial(r));
  }
}

TEST_CASE("serial relations share their family with the ts closure", "[definable]") {
  for (auto r : oracle::ExhaustiveRelations(make_universe(3))) {
    if (!is_serial(r)) continue;
    CHECK(definable_family_naive(r) == definable_family_naive(ts_closure(r)));
  }

  oracle::SplitMix64 rng(47);
  for (int t = 0; t < 150; ++t) {
    auto u = make_universe(2 + t % 9);
    Relation r = oracle::random_serial_relation(u, 0.3, rng);
    CHECK(definable_family_naive(r) == definable_family_naive(ts_closure(r)));
  }
}

TEST_CASE("enumerated families are closed under complement", "[definable]") {
  oracle::SplitMix64 rng(48);
  for (int t = 0; t < 100; ++t) {
    auto u = make_universe(1 + t % 7);
    Relation r = oracle::random_relation(u, 0.4, rng);
    const SetFamily d = definable_family_naive(r);
    for (const Subset& x : d) CHECK(d.contains(~x));
    // complement maps the inner family onto the outer one and back
    const SetFamily inner = inner_family_naive(r);
    const SetFamily outer = outer_family_naive(r);
    for (const Subset& x : inner) CHECK(outer.contains(~x));
    for (const Subset& x : outer) CHECK(inner.contains(~x));
  }
}
