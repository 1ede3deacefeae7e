#pragma once

#include <string>
#include <vector>

#include "ix/space.hpp"

namespace ix {

/// A labelled transition: from its source state, `label` leads to `next`.
struct Transition {
  std::string label;
  StateIndex next;

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Per source state, an ordered family of labelled next states.
class TransitionStructure {
public:
  /// Throws InvalidStructure when a next index is out of range or a label
  /// repeats at one state.
  TransitionStructure(SpacePtr source, SpacePtr target,
                      std::vector<std::vector<Transition>> transitions);

  const SpacePtr& source() const noexcept { return source_; }
  const SpacePtr& target() const noexcept { return target_; }
  const std::vector<Transition>& at(StateIndex s) const { return transitions_.at(s); }

  /// The family T(s) as a subset of the target.
  Subset successors(StateIndex s) const;

  friend bool operator==(const TransitionStructure&, const TransitionStructure&) = default;

private:
  SpacePtr source_;
  SpacePtr target_;
  std::vector<std::vector<Transition>> transitions_;
};

/// One transition per state, labelled "*", back to itself.
TransitionStructure transition_identity(SpacePtr space);

/// Labels are "(t1,t2)"; next is chained.
TransitionStructure compose(const TransitionStructure& t1, const TransitionStructure& t2);

/// (s1,s3) ∈ T;R  ⇔  T(s1) ⋒ R˘(s3).
Relation pre_compose(const TransitionStructure& t, const Relation& r);

/// (s1,s2) ∈ R/T  ⇔  T(s2) ⊆ R(s1), for R ⊆ S1×S3 and T : S2 → Fam(S3).
Relation post_divide(const Relation& r, const TransitionStructure& t);

/// T ; eq, the relation underlying a transition structure.
Relation to_relation(const TransitionStructure& t);

enum class Update { angelic, demonic };

/// ⟨R⟩(U) = {s | R(s) ⋒ U} and [R](U) = {s | R(s) ⊆ U}. U lives in the
/// codomain of R; the result lives in its domain.
Subset update(const Relation& r, const Subset& u, Update mode);

inline Subset angelic_update(const Relation& r, const Subset& u) {
  return update(r, u, Update::angelic);
}
inline Subset demonic_update(const Relation& r, const Subset& u) {
  return update(r, u, Update::demonic);
}

}  // namespace ix
