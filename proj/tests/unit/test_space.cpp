#include "ix/error.hpp"
#include "ix/space.hpp"
#include "ix/transition.hpp"
#include "support.hpp"

using namespace ix;

TEST_CASE("spaces reject duplicate state names") {
  CHECK_THROWS_AS(make_space("S", {"a", "b", "a"}), InvalidStructure);
  const SpacePtr s = make_space("S", {"a", "b"});
  CHECK(s->index_of("b") == 1);
  CHECK_FALSE(s->index_of("c"));
  CHECK(same_space(s, make_space("S", {"a", "b"})));
  CHECK_FALSE(same_space(s, make_space("T", {"a", "b"})));
}

TEST_CASE("product space is row-major") {
  const SpacePtr p = product_space(make_space("A", {"x", "y"}), make_space("B", {"0", "1", "2"}));
  REQUIRE(p->size() == 6);
  CHECK(p->state_name(0) == "(x,0)");
  CHECK(p->state_name(4) == "(y,1)");
}

TEST_CASE("subset algebra") {
  const SpacePtr s = numbered_space(70);
  Subset u(s, {0, 63, 64, 69});
  Subset v(s, {1, 64});
  CHECK(u.count() == 4);
  CHECK((u & v) == Subset(s, {64}));
  CHECK((u | v).count() == 5);
  CHECK((u - v) == Subset(s, {0, 63, 69}));
  CHECK(u.complement().count() == 66);
  CHECK(overlap(u, v) == 64);
  CHECK_FALSE(overlap(u - v, v));
  CHECK(Subset(s, {63}).subset_of(u));
  CHECK(Subset::full(s).is_full());
  CHECK(Subset(s).empty());
}

TEST_CASE("subset masks and rendering") {
  const SpacePtr s = ixtest::space3();
  const Subset u = Subset::from_mask(s, 0b101);
  CHECK(to_string(u) == "{s0,s2}");
  CHECK(u.mask() == 0b101);
  CHECK(to_string(Subset(s)) == "{}");
}

TEST_CASE("relation image, preimage, converse") {
  const SpacePtr s = ixtest::space3();
  const Relation r = Relation::from_pairs(s, s, {{0, 1}, {0, 2}, {2, 2}});
  CHECK(r.image(Subset(s, {0})) == Subset(s, {1, 2}));
  CHECK(r.preimage(Subset(s, {2})) == Subset(s, {0, 2}));
  CHECK(r.converse().converse() == r);
  CHECK(r.converse().contains(1, 0));
  CHECK(to_string(r) == "{(s0,s1),(s0,s2),(s2,s2)}");
}

TEST_CASE("rtc is the least reflexive transitive superset") {
  const SpacePtr s = ixtest::space3();
  const Relation r = Relation::from_pairs(s, s, {{0, 1}, {1, 2}});
  const Relation c = r.rtc();
  CHECK(c.is_reflexive());
  CHECK(c.is_transitive());
  CHECK(c.count() == 6);
  CHECK(c.contains(0, 2));
  CHECK_FALSE(c.contains(2, 0));
  CHECK(c.rtc() == c);
}

TEST_CASE("composition rejects mismatched spaces") {
  const SpacePtr a = make_space("A", {"x"});
  const SpacePtr b = make_space("B", {"y"});
  CHECK_THROWS_AS(compose(Relation(a, b), Relation(a, b)), SpaceMismatch);
}

TEST_CASE("galois connection between updates, randomized") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng(Rng::derive(11, i));
    const RandomShape shape{1, 5, 3, 3};
    const SpacePtr a = random_space(rng, shape, "A");
    const SpacePtr b = random_space(rng, shape, "B");
    const Relation r = random_relation(rng, a, b);
    const Subset u = random_subset(rng, a);
    const Subset v = random_subset(rng, b);
    // ⟨R˘⟩ ⊣ [R]: R(U) ⊆ V iff U ⊆ [R]V
    CHECK(r.image(u).subset_of(v) == u.subset_of(demonic_update(r, v)));
    CHECK(angelic_update(r, v) == r.preimage(v));
    // de Morgan duality of the two updates
    CHECK(demonic_update(r, v) == angelic_update(r, v.complement()).complement());
  }
}

TEST_CASE("divisions are right adjoints of composition, randomized") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng(Rng::derive(12, i));
    const RandomShape shape{1, 4, 3, 3};
    const SpacePtr s1 = random_space(rng, shape, "A");
    const SpacePtr s2 = random_space(rng, shape, "B");
    const SpacePtr s3 = random_space(rng, shape, "C");
    const Relation x = random_relation(rng, s1, s2);
    const Relation r = random_relation(rng, s2, s3);
    const Relation q = random_relation(rng, s1, s3);
    CHECK(compose(x, r).subset_of(q) == x.subset_of(post_divide(q, r)));
    const Relation y = random_relation(rng, s2, s3);
    const Relation r2 = random_relation(rng, s1, s2);
    CHECK(compose(r2, y).subset_of(q) == y.subset_of(pre_divide(r2, q)));
  }
}

TEST_CASE("transition structures") {
  const SpacePtr s = ixtest::space3();
  CHECK_THROWS_AS(TransitionStructure(s, s, {{{"a", 0}, {"a", 1}}, {}, {}}), InvalidStructure);
  CHECK_THROWS_AS(TransitionStructure(s, s, {{{"a", 7}}, {}, {}}), InvalidStructure);
  const TransitionStructure t(s, s, {{{"a", 1}, {"b", 2}}, {{"c", 2}}, {}});
  CHECK(t.successors(0) == Subset(s, {1, 2}));
  CHECK(to_relation(t).count() == 3);
  const TransitionStructure tt = compose(t, t);
  CHECK(tt.at(0).size() == 1);
  CHECK(tt.at(0)[0].label == "(a,c)");
  CHECK(compose(transition_identity(s), t).successors(0) == t.successors(0));
  CHECK(pre_compose(t, Relation::identity(s)) == to_relation(t));
}
