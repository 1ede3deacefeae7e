#include "ix/topology.hpp"

#include "ix/error.hpp"
#include "ix/random.hpp"

namespace ix {

SelfSimulation SelfSimulation::certify(InteractionStructure w, Relation leq) {
  require_homogeneous(w, "self-simulation");
  require_same_space(w.source(), leq.domain(), "self-simulation");
  require_same_space(w.source(), leq.codomain(), "self-simulation");
  if (!leq.is_reflexive() || !leq.is_transitive()) {
    throw InvalidPreorder("self-simulation: relation is not reflexive and transitive");
  }
  SimCheck check = check_sim(w, w, leq.converse(), SimKind::general);
  if (!check.ok()) {
    const auto& c = *check.counterexample;
    throw InvalidPreorder("self-simulation: converse of the preorder is not a general simulation "
                          "at (" + w.source()->state_name(c.high) + "," +
                          w.source()->state_name(c.low) + "," + w.command(c.high, c.command).name +
                          ")");
  }
  return SelfSimulation(std::move(w), std::move(leq), std::move(*check.cert));
}

SelfSimulation saturation_preorder(const InteractionStructure& w) {
  require_homogeneous(w, "saturation_preorder");
  const auto& space = w.source();
  Relation leq(space, space);
  for (std::size_t t = 0; t < space->size(); ++t) {
    cover(w, Subset(space, {t})).subset.for_each([&](StateIndex s) { leq.insert(s, t); });
  }
  return SelfSimulation::certify(w, std::move(leq));
}

SelfSimulation identity_preorder(const InteractionStructure& w) {
  return SelfSimulation::certify(w, Relation::identity(w.source()));
}

std::pair<LocalizedStructure, SelfSimulation> localize_with_preorder(
    const InteractionStructure& w, StateIndex init, std::size_t cap) {
  LocalizedStructure l = localize(w, init, cap);
  SelfSimulation ss = SelfSimulation::certify(l.structure, l.leq);
  return {std::move(l), std::move(ss)};
}

Subset down_closure(const SelfSimulation& ss, const Subset& u) {
  return down_closure(ss.leq(), u);
}

Subset up_closure(const SelfSimulation& ss, const Subset& u) { return up_closure(ss.leq(), u); }

Subset bin_down(const SelfSimulation& ss, const Subset& u, const Subset& v) {
  return down_closure(ss, u) & down_closure(ss, v);
}

Subset localized_cover(const SelfSimulation& ss, const Subset& u) {
  return cover(ss.structure(), down_closure(ss, u)).subset;
}

Subset localized_interior(const SelfSimulation& ss, const Subset& v) {
  return interior(ss.structure(), up_closure(ss, v)).subset;
}

std::optional<LocalizationCounterexample> check_localized(const SelfSimulation& ss,
                                                          bool strict_one_step) {
  const auto& w = ss.structure();
  const auto& space = w.source();
  for (std::size_t s1 = 0; s1 < space->size(); ++s1) {
    const Subset below_s1 = down_closure(ss, Subset(space, {s1}));
    for (StateIndex s2 : ss.leq().row(s1).members()) {
      for (std::size_t a = 0; a < w.command_count(s2); ++a) {
        const Subset target = down_closure(ss, w.successors(s2, a)) & below_s1;
        const bool ok = strict_one_step ? angel_step(w, target).contains(s1)
                                        : cover(w, target).subset.contains(s1);
        if (!ok) return LocalizationCounterexample{s1, s2, a};
      }
    }
  }
  return std::nullopt;
}

const char* to_string(PointCondition c) {
  switch (c) {
    case PointCondition::closed:
      return "closed";
    case PointCondition::nonempty:
      return "nonempty";
    case PointCondition::convergent:
      return "convergent";
  }
  return "?";
}

PointVerdict check_formal_point(const SelfSimulation& ss, const Subset& alpha) {
  const auto& space = ss.structure().source();
  require_same_space(space, alpha.space(), "check_formal_point");
  PointVerdict v;
  const Subset closure = localized_interior(ss, alpha);
  if (!(closure == alpha)) {
    const Subset diff = (closure - alpha) | (alpha - closure);
    return PointVerdict{PointCondition::closed, diff.first(), std::nullopt};
  }
  if (!overlap(alpha, alpha)) return PointVerdict{PointCondition::nonempty, {}, {}};
  for (StateIndex s1 : alpha.members()) {
    for (StateIndex s2 : alpha.members()) {
      const Subset meet = bin_down(ss, Subset(space, {s1}), Subset(space, {s2}));
      if (!overlap(meet, alpha)) return PointVerdict{PointCondition::convergent, s1, s2};
    }
  }
  return v;
}

const char* to_string(MapCondition c) {
  switch (c) {
    case MapCondition::simulation:
      return "simulation";
    case MapCondition::totality:
      return "totality";
    case MapCondition::convergence:
      return "convergence";
  }
  return "?";
}

MapVerdict check_continuous_map(const Relation& r, const SelfSimulation& ss_high,
                                const SelfSimulation& ss_low) {
  const auto& wh = ss_high.structure();
  const auto& wl = ss_low.structure();
  SimCheck sim = check_sim(wh, wl, r, SimKind::general);
  if (!sim.ok()) return MapVerdict{MapCondition::simulation, sim.counterexample, {}, {}};

  const Subset reach = localized_cover(ss_low, r.image(Subset::full(wh.source())));
  if (!reach.is_full()) {
    return MapVerdict{MapCondition::totality, {}, reach.complement().first(), {}};
  }

  const auto& hs = wh.source();
  for (std::size_t s1 = 0; s1 < hs->size(); ++s1) {
    for (std::size_t s2 = 0; s2 < hs->size(); ++s2) {
      const Subset lhs = bin_down(ss_low, r.row(s1), r.row(s2));
      const Subset meet = bin_down(ss_high, Subset(hs, {s1}), Subset(hs, {s2}));
      if (!lhs.subset_of(localized_cover(ss_low, r.image(meet)))) {
        return MapVerdict{MapCondition::convergence, {}, s1, s2};
      }
    }
  }
  return MapVerdict{};
}

namespace {

template <typename F>
void for_subsets(const SpacePtr& space, std::size_t exhaustive_limit, std::size_t samples,
                 Rng& rng, bool& exhaustive, F&& f) {
  if (space->size() <= exhaustive_limit && space->size() < 64) {
    const std::uint64_t total = std::uint64_t{1} << space->size();
    for (std::uint64_t m = 0; m < total; ++m) {
      if (!f(Subset::from_mask(space, m))) return;
    }
    return;
  }
  exhaustive = false;
  for (std::size_t i = 0; i < samples; ++i) {
    if (!f(random_subset(rng, space))) return;
  }
}

}  // namespace

ContinuityReport continuity_conditions(const Relation& r, const InteractionStructure& w_high,
                                       const InteractionStructure& w_low,
                                       std::size_t exhaustive_limit, std::size_t samples,
                                       std::uint64_t seed) {
  require_homogeneous(w_high, "continuity_conditions");
  require_homogeneous(w_low, "continuity_conditions");
  require_same_space(w_high.source(), r.domain(), "continuity_conditions");
  require_same_space(w_low.source(), r.codomain(), "continuity_conditions");
  ContinuityReport rep;
  Rng rng(seed);

  for_subsets(w_high.source(), exhaustive_limit, samples, rng, rep.exhaustive,
              [&](const Subset& u) {
                ++rep.subsets_checked;
                const Subset lhs = r.image(cover(w_high, u).subset);
                if (!lhs.subset_of(cover(w_low, r.image(u)).subset)) {
                  rep.cond1 = false;
                  rep.cond1_witness = u;
                  return false;
                }
                return true;
              });
  for_subsets(w_low.source(), exhaustive_limit, samples, rng, rep.exhaustive,
              [&](const Subset& v) {
                ++rep.subsets_checked;
                const Subset lhs = r.preimage(interior(w_low, v).subset);
                if (!lhs.subset_of(interior(w_high, r.preimage(v)).subset)) {
                  rep.cond2 = false;
                  rep.cond2_witness = v;
                  return false;
                }
                return true;
              });
  return rep;
}

}  // namespace ix
