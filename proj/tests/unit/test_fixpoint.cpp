#include "ix/fixpoint.hpp"
#include "ixcli/oracle.hpp"
#include "support.hpp"

using namespace ix;

TEST_CASE("cover of count3 records stages and witnesses") {
  const InteractionStructure c = fixtures::count3();
  const SpacePtr& s = c.source();
  const CoverResult r = cover(c, Subset(s, {2}));
  CHECK(r.subset.is_full());
  CHECK(r.stage[0] == 2);
  CHECK(r.stage[1] == 1);
  CHECK(r.stage[2] == 0);
  CHECK(r.witness[0] == 0);
  CHECK_FALSE(r.witness[2]);
  CHECK(cover(c, Subset(s)).subset.empty());
}

TEST_CASE("cover and interior on coin and magic") {
  const InteractionStructure k = fixtures::coin();
  CHECK(cover(k, Subset(k.source(), {1})).subset == Subset(k.source(), {1}));
  const InteriorResult j = interior(k, Subset(k.source(), {0, 1}));
  CHECK(j.subset == Subset(k.source(), {0, 1}));
  CHECK(j.choice[0][0] == 0);
  const InteractionStructure m = fixtures::magic();
  CHECK(cover(m, Subset(m.source())).subset.is_full());
  CHECK(interior(m, Subset::full(m.source())).subset.empty());
  CHECK(positivity(m).empty());
}

TEST_CASE("interior on count3") {
  const InteractionStructure c = fixtures::count3();
  const SpacePtr& s = c.source();
  CHECK(interior(c, Subset::full(s)).subset.is_full());
  CHECK(interior(c, Subset(s, {0, 1})).subset.empty());
}

TEST_CASE("cover is the least saturated superset, randomized") {
  for (std::uint64_t i = 0; i < 150; ++i) {
    auto [rng, s, w] = ixtest::sample(31, i);
    const Subset u = random_subset(rng, s);
    const Subset a = cover(w, u).subset;
    CHECK(a == oracle::least_saturated(w, u));
    CHECK(a == oracle::tree_roots(w, u));
    CHECK(u.subset_of(a));
    CHECK(angel_step(w, a).subset_of(a));
    CHECK(cover(w, a).subset == a);
    CHECK(is_open(w, a));
  }
}

TEST_CASE("interior is the greatest invariant, randomized") {
  for (std::uint64_t i = 0; i < 150; ++i) {
    auto [rng, s, w] = ixtest::sample(32, i);
    const Subset v = random_subset(rng, s);
    const InteriorResult j = interior(w, v);
    CHECK(j.subset == oracle::greatest_invariant(w, v));
    CHECK(j.subset.subset_of(v));
    CHECK(j.subset.subset_of(demon_step(w, j.subset)));
    CHECK(is_closed(w, j.subset));
    for (StateIndex x : j.subset.members()) {
      for (CommandIndex a = 0; a < w.command_count(x); ++a) {
        REQUIRE(j.choice[x][a]);
        CHECK(j.subset.contains(w.next(x, a, *j.choice[x][a])));
      }
    }
  }
}

TEST_CASE("open joins and closed meets") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto [rng, s, w] = ixtest::sample(33, i);
    const Subset u = random_subset(rng, s);
    const Subset v = random_subset(rng, s);
    CHECK(open_join(w, {u, v}, s) == cover(w, u | v).subset);
    CHECK(closed_meet(w, {u, v}, s) == interior(w, u & v).subset);
    CHECK(closed_meet(w, {}, s) == positivity(w));
    CHECK(open_join(w, {}, s).empty() == cover(w, Subset(s)).subset.empty());
  }
}

TEST_CASE("cover with a preorder uses the down-closure") {
  const InteractionStructure c = fixtures::count3();
  const SpacePtr& s = c.source();
  const Relation leq = Relation::from_pairs(s, s, {{0, 1}}).rtc();
  CHECK(down_closure(leq, Subset(s, {1})) == Subset(s, {0, 1}));
  CHECK(up_closure(leq, Subset(s, {0})) == Subset(s, {0, 1}));
  CHECK(cover(c, Subset(s, {1}), &leq).stage[0] == 0);
}
