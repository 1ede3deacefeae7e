#pragma once

// Basic topology induced by an interaction structure: self-simulations
// (preorders whose converse is a general simulation w → w), the localized
// cover A_{w,≤}(U) = A_w(↓U), localization, convergence, formal points and
// continuous maps.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "ix/algebra.hpp"
#include "ix/fixpoint.hpp"
#include "ix/simulation.hpp"

namespace ix {

/// An interaction structure with a preorder ≤ (pairs (s, s') mean s ≤ s')
/// whose converse ≥ is certified as a general simulation of w by itself.
class SelfSimulation {
public:
  /// Throws InvalidPreorder when `leq` is not reflexive and transitive or its
  /// converse fails the general-simulation check.
  static SelfSimulation certify(InteractionStructure w, Relation leq);

  const InteractionStructure& structure() const noexcept { return w_; }
  const Relation& leq() const noexcept { return leq_; }
  /// Certificate for converse(leq) as a general simulation w → w.
  const SimCert& certificate() const noexcept { return cert_; }

private:
  SelfSimulation(InteractionStructure w, Relation leq, SimCert cert)
      : w_(std::move(w)), leq_(std::move(leq)), cert_(std::move(cert)) {}

  InteractionStructure w_;
  Relation leq_;
  SimCert cert_;
};

/// s ≤ s' iff s ∈ A_w({s'}).
SelfSimulation saturation_preorder(const InteractionStructure& w);

/// Identity preorder; certifies for every w.
SelfSimulation identity_preorder(const InteractionStructure& w);

/// L(w) from {init} together with its reverse-inclusion preorder.
std::pair<LocalizedStructure, SelfSimulation> localize_with_preorder(
    const InteractionStructure& w, StateIndex init, std::size_t cap = kDefaultSizeCap);

Subset down_closure(const SelfSimulation& ss, const Subset& u);
Subset up_closure(const SelfSimulation& ss, const Subset& u);
/// U ↓ V = ↓U ∩ ↓V.
Subset bin_down(const SelfSimulation& ss, const Subset& u, const Subset& v);

/// A_{w,≤}(U) = A_w(↓U).
Subset localized_cover(const SelfSimulation& ss, const Subset& u);
/// J_{w,≤}(V) = J_w(↑V).
Subset localized_interior(const SelfSimulation& ss, const Subset& v);

struct LocalizationCounterexample {
  StateIndex lower;   ///< s1
  StateIndex upper;   ///< s2, with s1 ≤ s2
  CommandIndex command;  ///< a2 ∈ A(s2)

  friend bool operator==(const LocalizationCounterexample&,
                         const LocalizationCounterexample&) = default;
};

/// For all s1 ≤ s2 and a2 ∈ A(s2): s1 ∈ A_w({s2[a2/d2] | d2} ↓ {s1}).
/// With `strict_one_step` the cover is replaced by one angelic step w°.
/// Returns the least failing (s1, s2, a2), or nothing when localized.
std::optional<LocalizationCounterexample> check_localized(const SelfSimulation& ss,
                                                          bool strict_one_step = false);

enum class PointCondition { closed, nonempty, convergent };
const char* to_string(PointCondition c);

struct PointVerdict {
  std::optional<PointCondition> failed;
  /// closed: a state where α and J_w(↑α) differ; convergent: the pair.
  std::optional<StateIndex> first;
  std::optional<StateIndex> second;

  bool ok() const noexcept { return !failed; }
};

/// α is closed (α = J_w(↑α)), nonempty, and convergent
/// (s1, s2 ∈ α ⇒ {s1} ↓ {s2} ⋒ α). Conditions are checked in that order.
PointVerdict check_formal_point(const SelfSimulation& ss, const Subset& alpha);

enum class MapCondition { simulation, totality, convergence };
const char* to_string(MapCondition c);

struct MapVerdict {
  std::optional<MapCondition> failed;
  /// simulation: (s_h, s_l, a_h) via `counterexample`; totality: a low state
  /// outside A_{l,≤}(R(S_h)); convergence: the high pair (s1, s2).
  std::optional<SimCounterexample> counterexample;
  std::optional<StateIndex> first;
  std::optional<StateIndex> second;

  bool ok() const noexcept { return !failed; }
};

/// R ⊆ S_h × S_l is a general simulation, total (S_l = A_{l,≤}(R(S_h))) and
/// convergent (R(s1) ↓ R(s2) ⊆ A_{l,≤}(R(s1 ↓ s2)) for all high s1, s2).
MapVerdict check_continuous_map(const Relation& r, const SelfSimulation& ss_high,
                                const SelfSimulation& ss_low);

struct ContinuityReport {
  /// R(A_h(U)) ⊆ A_l(R(U)) for all U ⊆ S_h.
  bool cond1 = true;
  /// R˘(J_l(V)) ⊆ J_h(R˘(V)) for all V ⊆ S_l.
  bool cond2 = true;
  std::optional<Subset> cond1_witness;
  std::optional<Subset> cond2_witness;
  /// False when subsets were sampled instead of enumerated.
  bool exhaustive = true;
  std::size_t subsets_checked = 0;
};

/// Evaluates the two continuity inclusions for the converse of R (a relation
/// from S_l to S_h) between the basic topologies of w_l and w_h. Spaces of at
/// most `exhaustive_limit` states are enumerated; larger ones use `samples`
/// random subsets drawn from `seed`.
ContinuityReport continuity_conditions(const Relation& r, const InteractionStructure& w_high,
                                       const InteractionStructure& w_low,
                                       std::size_t exhaustive_limit = 12,
                                       std::size_t samples = 256, std::uint64_t seed = 0);

}  // namespace ix
