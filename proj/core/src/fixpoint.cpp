#include "ix/fixpoint.hpp"

#include "ix/error.hpp"

namespace ix {

Subset down_closure(const Relation& leq, const Subset& u) {
  require_same_space(leq.codomain(), u.space(), "down_closure");
  return leq.preimage(u);
}

Subset up_closure(const Relation& leq, const Subset& u) {
  require_same_space(leq.domain(), u.space(), "up_closure");
  return leq.image(u);
}

CoverResult cover(const InteractionStructure& w, const Subset& u, const Relation* preorder) {
  require_homogeneous(w, "cover");
  require_same_space(w.source(), u.space(), "cover");
  Subset goal = u;
  if (preorder) {
    require_same_space(w.source(), preorder->domain(), "cover");
    require_same_space(w.source(), preorder->codomain(), "cover");
    if (!preorder->is_reflexive() || !preorder->is_transitive()) {
      throw InvalidPreorder("cover: preorder is not reflexive and transitive");
    }
    goal = down_closure(*preorder, u);
  }

  const std::size_t n = w.source()->size();
  CoverResult r{goal, std::vector<std::optional<std::size_t>>(n),
                std::vector<std::optional<CommandIndex>>(n), 1};
  goal.for_each([&](StateIndex s) { r.stage[s] = 0; });

  for (std::size_t round = 1;; ++round) {
    // Entry in this round depends only on the previous round's members.
    const Subset prev = r.subset;
    bool grew = false;
    for (std::size_t s = 0; s < n; ++s) {
      if (prev.contains(s)) continue;
      for (std::size_t a = 0; a < w.command_count(s); ++a) {
        if (w.successors(s, a).subset_of(prev)) {
          r.subset.insert(s);
          r.stage[s] = round;
          r.witness[s] = a;
          grew = true;
          break;
        }
      }
    }
    r.rounds = round;
    if (!grew) break;
  }
  return r;
}

InteriorResult interior(const InteractionStructure& w, const Subset& v) {
  require_homogeneous(w, "interior");
  require_same_space(w.source(), v.space(), "interior");
  const std::size_t n = w.source()->size();
  InteriorResult r{v, {}, 0};
  for (std::size_t round = 1;; ++round) {
    Subset next = v & demon_step(w, r.subset);
    r.rounds = round;
    if (next == r.subset) break;
    r.subset = std::move(next);
  }
  r.choice.resize(n);
  for (std::size_t s = 0; s < n; ++s) {
    r.choice[s].resize(w.command_count(s));
    if (!r.subset.contains(s)) continue;
    for (std::size_t a = 0; a < w.command_count(s); ++a) {
      for (std::size_t d = 0; d < w.response_count(s, a); ++d) {
        if (r.subset.contains(w.next(s, a, d))) {
          r.choice[s][a] = d;
          break;
        }
      }
    }
  }
  return r;
}

Subset open_join(const InteractionStructure& w, const std::vector<Subset>& us, SpacePtr space) {
  Subset all(std::move(space));
  for (const auto& u : us) all |= u;
  return cover(w, all).subset;
}

Subset closed_meet(const InteractionStructure& w, const std::vector<Subset>& vs, SpacePtr space) {
  Subset all = Subset::full(std::move(space));
  for (const auto& v : vs) all &= v;
  return interior(w, all).subset;
}

bool is_open(const InteractionStructure& w, const Subset& u) { return cover(w, u).subset == u; }

bool is_closed(const InteractionStructure& w, const Subset& v) {
  return interior(w, v).subset == v;
}

Subset positivity(const InteractionStructure& w) {
  return interior(w, Subset::full(w.source())).subset;
}

}  // namespace ix
