#pragma once

// Brute-force reference implementations used to cross-check the engines.
// They read the raw ⟨A, D, n⟩ tables directly and share no code with the
// fixpoint or simulation engines.

#include <cstddef>
#include <optional>

#include "ix/istruct.hpp"
#include "ix/programs.hpp"
#include "ix/simulation.hpp"

namespace ix::oracle {

/// ∃a ∀d and ∀a ∃d by direct quantifier scans.
Subset angel(const InteractionStructure& w, const Subset& u);
Subset demon(const InteractionStructure& w, const Subset& u);

/// Searches for a client tree of depth at most `depth` rooted at `s` whose
/// exits all lie in `goal`. Trees are tried in order of increasing depth
/// bound, commands in index order. With `memo` off the search is a plain
/// enumeration; with it on, failed (state, bound) pairs are remembered.
std::optional<ClientTree> find_tree(const InteractionStructure& w, StateIndex s,
                                    const Subset& goal, std::size_t depth, bool memo = true);

/// Roots of client trees of depth ≤ |S| with all exits in `goal`.
Subset tree_roots(const InteractionStructure& w, const Subset& goal, bool memo = true);

/// ⋂ {X ⊇ U | w°(X) ⊆ X}, over all 2^|S| subsets.
Subset least_saturated(const InteractionStructure& w, const Subset& u);
/// ⋃ {X ⊆ V | X ⊆ w•(X)}, over all 2^|S| subsets.
Subset greatest_invariant(const InteractionStructure& w, const Subset& v);

/// Reflexive-transitive closure by depth-first path enumeration from each state.
Relation path_closure(const Relation& r);

/// Nested quantifier scan of the linear condition
/// ∀(h,l)∈R ∀a_h ∃a_l ∀d_l ∃d_h. (h[a_h/d_h], l[a_l/d_l]) ∈ R.
bool is_linear_sim(const InteractionStructure& w_high, const InteractionStructure& w_low,
                   const Relation& r);

/// General condition via tree search in w_low: every (h,l), a_h has a
/// low client tree of depth ≤ |S_l| from l whose exits each relate to some
/// h[a_h/d_h].
bool is_general_sim(const InteractionStructure& w_high, const InteractionStructure& w_low,
                    const Relation& r);

/// Predicate form of the linear condition, ⟨R˘⟩ ∘ w_h° ⊆ w_l° ∘ ⟨R˘⟩:
/// R(w_h°(U)) ⊆ w_l°(R(U)) for every U ⊆ S_h.
bool is_subcommutative(const InteractionStructure& w_high, const InteractionStructure& w_low,
                       const Relation& r);

/// ⟨R˘⟩(U) ⊆ V ⇔ U ⊆ [R](V) on all subset pairs, by set scans.
bool galois_holds(const Relation& r);

}  // namespace ix::oracle
