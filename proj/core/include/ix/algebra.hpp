#pragma once

// Constructions on interaction structures: dual, updates, lattice extrema,
// sequential composition, the two products, factorization and the
// log-keeping localization L(w).
//
// Enumerated constructions list synthesized commands lexicographically with
// the first coordinate most significant, and give them readable structured
// names ("inc↦ok", "(inc,play)", "inr play").

#include <cstddef>
#include <vector>

#include "ix/istruct.hpp"
#include "ix/transition.hpp"

namespace ix {

inline constexpr std::size_t kDefaultSizeCap = 1'000'000;

/// Commands are the Demon's choice functions a ↦ d ∈ D(s,a); responses are
/// the original commands. Throws SizeCapExceeded when Π_a |D(s,a)| exceeds
/// `cap` at some state.
InteractionStructure dual(const InteractionStructure& w, std::size_t cap = kDefaultSizeCap);

/// One command "skip" with one response "()" back to the same state.
InteractionStructure skip(SpacePtr space);

/// ⟨T⟩: one command per transition label, each with the single response "()".
InteractionStructure angelic_update(const TransitionStructure& t);
/// [T]: the single command "()" whose responses are the transition labels.
InteractionStructure demonic_update(const TransitionStructure& t);

enum class UpdateKind { skip, angelic, demonic };
/// `skip` ignores the transitions and uses T's source space.
InteractionStructure from_transition(const TransitionStructure& t, UpdateKind kind);

/// Tagged disjoint union of commands ("i:a"). The empty union is abort.
InteractionStructure union_all(const std::vector<InteractionStructure>& ws, SpacePtr source,
                               SpacePtr target);
InteractionStructure union_all(const std::vector<InteractionStructure>& ws);

/// Commands are tuples "(a_1,...,a_k)", responses tagged "i:d". The empty
/// intersection is magic: one command "()" with no responses.
InteractionStructure intersection_all(const std::vector<InteractionStructure>& ws,
                                      SpacePtr source, SpacePtr target,
                                      std::size_t cap = kDefaultSizeCap);
InteractionStructure intersection_all(const std::vector<InteractionStructure>& ws,
                                      std::size_t cap = kDefaultSizeCap);

/// w1 ; w2. Commands at s are pairs (a1, f) with f choosing a w2-command at
/// every s[a1/d1]; responses are pairs (d1, d2).
InteractionStructure seq(const InteractionStructure& w1, const InteractionStructure& w2,
                         std::size_t cap = kDefaultSizeCap);

/// Synchronous (lock-step) tensor on the product space.
InteractionStructure tensor(const InteractionStructure& w1, const InteractionStructure& w2,
                            std::size_t cap = kDefaultSizeCap);

/// Angelic product: the Angel picks a side ("inl a" / "inr b") and only that
/// side steps. Both arguments must be homogeneous.
InteractionStructure angelic_product(const InteractionStructure& w1,
                                     const InteractionStructure& w2);

struct Factorization {
  SpacePtr mid;                ///< states (s,a) in declaration order
  TransitionStructure angelic; ///< S → mid, labelled by commands
  TransitionStructure demonic; ///< mid → S', labelled by responses
};

/// w = ⟨T_a⟩ ; [T_d] over the intermediate space Σ_s A(s).
Factorization factorize(const InteractionStructure& w);

/// The transitions s --a/d--> s[a/d], ignoring who chooses.
TransitionStructure underlying_transitions(const InteractionStructure& w);

struct LocalizedStructure {
  InteractionStructure structure;
  /// carriers[i] is the subset of the original space that L-state i logs.
  std::vector<Subset> carriers;
  /// l1 ≤ l2 iff carriers[l1] ⊇ carriers[l2].
  Relation leq;
};

/// L(w) restricted to the subsets reachable from {init}. A command picks a
/// logged state s_i and a ∈ A(s_i); the response d adds s_i[a/d] to the log.
/// States are numbered in breadth-first discovery order.
LocalizedStructure localize(const InteractionStructure& w, StateIndex init,
                            std::size_t cap = kDefaultSizeCap);

}  // namespace ix
