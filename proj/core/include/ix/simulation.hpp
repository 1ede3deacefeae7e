#pragma once

// Simulation checking with certificate extraction, greatest simulations,
// Kleisli composition, saturation and the ⊑/≈ comparison.
//
// A relation R ⊆ S_h × S_l simulates w_h by w_l when, for every related
// pair (s_h, s_l) and every high command a_h, the low side can reach
// T = ⋃_{d_h} R(s_h[a_h/d_h]):
//   linear   in exactly one w_l step      (s_l ∈ w_l°(T))
//   affine   in at most one step          (s_l ∈ T ∪ w_l°(T))
//   tc       in at least one step         (s_l ∈ w_l°(A_l(T)))
//   general  in any number of steps       (s_l ∈ A_l(T))
// Both structures must be homogeneous.

#include <optional>

#include "ix/istruct.hpp"
#include "ix/programs.hpp"

namespace ix {

struct SimCounterexample {
  StateIndex high;
  StateIndex low;
  CommandIndex command;

  friend bool operator==(const SimCounterexample&, const SimCounterexample&) = default;
};

/// Exactly one of `cert` / `counterexample` is set.
struct SimCheck {
  std::optional<SimCert> cert;
  std::optional<SimCounterexample> counterexample;

  bool ok() const noexcept { return cert.has_value(); }
};

/// Counterexamples are the least (s_h, s_l, a_h) in index order; witnesses
/// take the least-index low command, the least-index high response and
/// stage-minimal trees.
SimCheck check_sim(const InteractionStructure& w_high, const InteractionStructure& w_low,
                   const Relation& r, SimKind kind);

/// Largest simulation of the given kind contained in `start`, by repeatedly
/// deleting pairs that violate the kind's condition.
Relation largest_sim_within(const InteractionStructure& w_high, const InteractionStructure& w_low,
                            const Relation& start, SimKind kind);

/// Union of all simulations of the given kind.
Relation greatest_sim(const InteractionStructure& w_high, const InteractionStructure& w_low,
                      SimKind kind);

/// Composition in the Kleisli category of the reflexive-transitive-closure
/// monad; the extension of a general simulation is itself, so this is
/// plain relational composition.
Relation kleisli_compose(const Relation& r, const Relation& q);

/// Row-wise cover: (s_h, s_l) ∈ Sat(R) ⇔ s_l ∈ A_l(R(s_h)).
Relation saturate(const Relation& r, const InteractionStructure& w_low);

enum class SimOrder { leq, geq, equiv, incomparable };
const char* to_string(SimOrder order);

/// Compares Sat(R) and Sat(Q) by inclusion both ways.
SimOrder sim_compare(const Relation& r, const Relation& q, const InteractionStructure& w_low);

}  // namespace ix
