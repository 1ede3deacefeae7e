#pragma once

// Cover A_w (least fixpoint, angelic iteration) and interior J_w (greatest
// fixpoint, demonic iteration). Both keep the constructive content of the
// fixpoint: entry stages with witness commands for the cover, a response
// choice table for the interior.

#include <cstddef>
#include <optional>
#include <vector>

#include "ix/istruct.hpp"

namespace ix {

struct CoverResult {
  Subset subset;
  /// Round at which each member entered; members of the goal have stage 0.
  std::vector<std::optional<std::size_t>> stage;
  /// For members with stage > 0: the least-index command all of whose
  /// responses land in strictly earlier stages.
  std::vector<std::optional<CommandIndex>> witness;
  /// Number of saturation rounds performed, including the final stable one.
  std::size_t rounds = 0;
};

struct InteriorResult {
  Subset subset;
  /// choice[s][a] is the least-index response keeping s[a/d] inside the
  /// subset; set for every member s and every a ∈ A(s).
  std::vector<std::vector<std::optional<ResponseIndex>>> choice;
  std::size_t rounds = 0;
};

/// Least fixpoint of X ↦ U ∪ w°(X). With a preorder (reflexive and
/// transitive on S), U is first replaced by its down-closure
/// {s | ∃u ∈ U. (s,u) ∈ preorder}.
CoverResult cover(const InteractionStructure& w, const Subset& u,
                  const Relation* preorder = nullptr);

/// Greatest fixpoint of X ↦ V ∩ w•(X), by pruning downwards from V.
InteriorResult interior(const InteractionStructure& w, const Subset& v);

/// A_w(⋃ us).
Subset open_join(const InteractionStructure& w, const std::vector<Subset>& us, SpacePtr space);
/// J_w(⋂ vs); the empty meet is J_w(S).
Subset closed_meet(const InteractionStructure& w, const std::vector<Subset>& vs, SpacePtr space);
bool is_open(const InteractionStructure& w, const Subset& u);
bool is_closed(const InteractionStructure& w, const Subset& v);
/// Pos = J_w(S).
Subset positivity(const InteractionStructure& w);

/// {s | ∃u ∈ U. s ≤ u} for a relation holding pairs (s, u) with s ≤ u.
Subset down_closure(const Relation& leq, const Subset& u);
/// {s | ∃u ∈ U. u ≤ s}.
Subset up_closure(const Relation& leq, const Subset& u);

}  // namespace ix
