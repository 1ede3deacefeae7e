#include "ix/algebra.hpp"
#include "ix/error.hpp"
#include "ix/fixpoint.hpp"
#include "ix/simulation.hpp"
#include "ix/topology.hpp"
#include "support.hpp"

using namespace ix;

TEST_CASE("saturation preorder of count3") {
  const InteractionStructure c = fixtures::count3();
  const SpacePtr& s = c.source();
  const SelfSimulation sat = saturation_preorder(c);
  CHECK(sat.leq().count() == 6);
  CHECK(sat.leq().contains(0, 2));
  CHECK_FALSE(sat.leq().contains(2, 0));
  CHECK(down_closure(sat, Subset(s, {2})).is_full());
  CHECK(up_closure(sat, Subset(s, {1})) == Subset(s, {1, 2}));
  CHECK(bin_down(sat, Subset(s, {1}), Subset(s, {2})) == Subset(s, {0, 1}));
  CHECK_FALSE(check_localized(sat));
  CHECK(saturation_preorder(fixtures::coin()).leq() == Relation::identity(fixtures::coin().source()));
}

TEST_CASE("identity preorder on count3 is not localized") {
  const SelfSimulation id = identity_preorder(fixtures::count3());
  const auto cx = check_localized(id);
  REQUIRE(cx);
  CHECK(*cx == LocalizationCounterexample{0, 0, 0});
}

TEST_CASE("certify rejects bad preorders") {
  const InteractionStructure c = fixtures::count3();
  const SpacePtr& s = c.source();
  CHECK_THROWS_AS(SelfSimulation::certify(c, Relation(s, s)), InvalidPreorder);
  // s2 ≤ s0 is reflexive-transitive but ≥ is not a simulation: s0 can move, s2 cannot
  const Relation bad = Relation::from_pairs(s, s, {{2, 0}}).rtc();
  CHECK_THROWS_AS(SelfSimulation::certify(c, bad), InvalidPreorder);
}

TEST_CASE("L(count3) is localized") {
  const auto [l, ss] = localize_with_preorder(fixtures::count3(), 0);
  CHECK_FALSE(check_localized(ss));
  CHECK_FALSE(check_localized(ss, true));
}

TEST_CASE("L(w) is localized and convergent, randomized") {
  for (std::uint64_t i = 0; i < 60; ++i) {
    auto [rng, s, w] = ixtest::sample(61, i, 4);
    const auto [l, ss] = localize_with_preorder(w, rng.below(s->size()));
    if (l.structure.source()->size() > 64) continue;
    REQUIRE_FALSE(check_localized(ss));
    const SpacePtr& ls = l.structure.source();
    for (int k = 0; k < 10; ++k) {
      const Subset u = random_subset(rng, ls, 30);
      const Subset v = random_subset(rng, ls, 30);
      const Subset both = localized_cover(ss, u) & localized_cover(ss, v);
      CHECK(both.subset_of(localized_cover(ss, bin_down(ss, u, v))));
    }
  }
}

TEST_CASE("localized cover and interior are closure and interior operators") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto [rng, s, w] = ixtest::sample(62, i);
    const SelfSimulation sat = saturation_preorder(w);
    const Subset u = random_subset(rng, s);
    const Subset a = localized_cover(sat, u);
    CHECK(u.subset_of(a));
    CHECK(localized_cover(sat, a) == a);
    CHECK(down_closure(sat, a) == a);
    const Subset j = localized_interior(sat, u);
    CHECK(localized_interior(sat, j) == j);
    CHECK(up_closure(sat, j) == j);
  }
}

TEST_CASE("formal points") {
  const InteractionStructure c = fixtures::count3();
  const SpacePtr& s = c.source();
  const SelfSimulation sat = saturation_preorder(c);
  CHECK(check_formal_point(sat, Subset::full(s)).ok());
  const PointVerdict empty = check_formal_point(sat, Subset(s));
  CHECK(empty.failed == PointCondition::nonempty);
  const PointVerdict open = check_formal_point(sat, Subset(s, {0}));
  CHECK(open.failed == PointCondition::closed);

  const InteractionStructure k = fixtures::coin();
  const PointVerdict coin = check_formal_point(identity_preorder(k), Subset(k.source(), {0, 1}));
  CHECK(coin.failed == PointCondition::convergent);
  CHECK(coin.first == 0);
  CHECK(coin.second == 1);
}

TEST_CASE("continuous maps") {
  const InteractionStructure c = fixtures::count3();
  const InteractionStructure j = fixtures::jump2();
  const SelfSimulation sc = saturation_preorder(c);
  const SelfSimulation sj = saturation_preorder(j);
  CHECK(check_continuous_map(Relation::identity(c.source()), sc, sc).ok());
  const Relation refine = Relation::from_pairs(j.source(), c.source(), {{0, 0}, {1, 2}});
  CHECK(check_continuous_map(refine, sj, sc).ok());
  const MapVerdict none = check_continuous_map(Relation(j.source(), c.source()), sj, sc);
  CHECK(none.failed == MapCondition::totality);
  const MapVerdict back = check_continuous_map(refine.converse(), sc, sj);
  CHECK(back.failed == MapCondition::simulation);
}

TEST_CASE("general simulation iff continuity conditions, randomized") {
  for (std::uint64_t i = 0; i < 80; ++i) {
    Rng rng(Rng::derive(63, i));
    const RandomShape shape{1, 4, 3, 3};
    const SpacePtr h = random_space(rng, shape, "H");
    const SpacePtr l = random_space(rng, shape, "L");
    const InteractionStructure wh = random_structure(rng, h, shape, "wh");
    const InteractionStructure wl = random_structure(rng, l, shape, "wl");
    const Relation g = greatest_sim(wh, wl, SimKind::general);
    for (const Relation& r : {random_relation(rng, h, l), g & random_relation(rng, h, l, 70), g}) {
      const ContinuityReport rep = continuity_conditions(r, wh, wl);
      const bool sim = check_sim(wh, wl, r, SimKind::general).ok();
      CHECK(rep.exhaustive);
      CHECK(rep.cond1 == sim);
      if (sim) CHECK(rep.cond2);
      if (!rep.cond1) CHECK(rep.cond1_witness);
    }
  }
}

TEST_CASE("continuity sampling is flagged") {
  const SpacePtr s = numbered_space(14);
  Rng rng(3);
  const InteractionStructure w = random_structure(rng, s, RandomShape{14, 14, 2, 2});
  const ContinuityReport rep = continuity_conditions(Relation::identity(s), w, w, 12, 16, 1);
  CHECK_FALSE(rep.exhaustive);
  CHECK(rep.subsets_checked > 0);
  CHECK(rep.cond1);
  CHECK(rep.cond2);
}
