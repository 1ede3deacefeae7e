#include "ix/transition.hpp"

#include <unordered_set>

#include "ix/error.hpp"

namespace ix {

TransitionStructure::TransitionStructure(SpacePtr source, SpacePtr target,
                                         std::vector<std::vector<Transition>> transitions)
    : source_(std::move(source)), target_(std::move(target)), transitions_(std::move(transitions)) {
  if (transitions_.size() != source_->size()) {
    throw InvalidStructure("transition structure: expected " + std::to_string(source_->size()) +
                           " state rows, got " + std::to_string(transitions_.size()));
  }
  for (std::size_t s = 0; s < transitions_.size(); ++s) {
    std::unordered_set<std::string> labels;
    for (const auto& t : transitions_[s]) {
      if (t.next >= target_->size()) {
        throw InvalidStructure("transition structure: next index out of range at state '" +
                               source_->state_name(s) + "', label '" + t.label + "'");
      }
      if (!labels.insert(t.label).second) {
        throw InvalidStructure("transition structure: duplicate label '" + t.label +
                               "' at state '" + source_->state_name(s) + "'");
      }
    }
  }
}

Subset TransitionStructure::successors(StateIndex s) const {
  Subset out(target_);
  for (const auto& t : transitions_.at(s)) out.insert(t.next);
  return out;
}

TransitionStructure transition_identity(SpacePtr space) {
  std::vector<std::vector<Transition>> rows(space->size());
  for (std::size_t s = 0; s < rows.size(); ++s) rows[s].push_back({"*", s});
  return TransitionStructure(space, space, std::move(rows));
}

TransitionStructure compose(const TransitionStructure& t1, const TransitionStructure& t2) {
  require_same_space(t1.target(), t2.source(), "transition compose");
  std::vector<std::vector<Transition>> rows(t1.source()->size());
  for (std::size_t s = 0; s < rows.size(); ++s) {
    for (const auto& a : t1.at(s)) {
      for (const auto& b : t2.at(a.next)) {
        rows[s].push_back({"(" + a.label + "," + b.label + ")", b.next});
      }
    }
  }
  return TransitionStructure(t1.source(), t2.target(), std::move(rows));
}

Relation pre_compose(const TransitionStructure& t, const Relation& r) {
  require_same_space(t.target(), r.domain(), "pre_compose");
  Relation out(t.source(), r.codomain());
  for (std::size_t s = 0; s < t.source()->size(); ++s) out.row(s) = r.image(t.successors(s));
  return out;
}

Relation post_divide(const Relation& r, const TransitionStructure& t) {
  require_same_space(r.codomain(), t.target(), "post_divide");
  Relation out(r.domain(), t.source());
  for (std::size_t s1 = 0; s1 < r.domain()->size(); ++s1) {
    for (std::size_t s2 = 0; s2 < t.source()->size(); ++s2) {
      if (t.successors(s2).subset_of(r.row(s1))) out.insert(s1, s2);
    }
  }
  return out;
}

Relation to_relation(const TransitionStructure& t) {
  return pre_compose(t, Relation::identity(t.target()));
}

Subset update(const Relation& r, const Subset& u, Update mode) {
  require_same_space(r.codomain(), u.space(), "update");
  Subset out(r.domain());
  for (std::size_t s = 0; s < r.domain()->size(); ++s) {
    const bool member = mode == Update::angelic ? overlap(r.row(s), u).has_value()
                                                : r.row(s).subset_of(u);
    if (member) out.insert(s);
  }
  return out;
}

}  // namespace ix
