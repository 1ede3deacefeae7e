#pragma once

// Finite state spaces, subsets (bit-vector predicates) and relations
// (dense bit matrices). States are identified by their index in
// declaration order and every iteration runs in index order.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ix {

using StateIndex = std::size_t;

class StateSpace {
public:
  StateSpace(std::string name, std::vector<std::string> states);

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& states() const noexcept { return states_; }
  std::size_t size() const noexcept { return states_.size(); }
  const std::string& state_name(StateIndex s) const { return states_.at(s); }
  std::optional<StateIndex> index_of(const std::string& state) const;

  friend bool operator==(const StateSpace& a, const StateSpace& b) {
    return a.name_ == b.name_ && a.states_ == b.states_;
  }

private:
  std::string name_;
  std::vector<std::string> states_;
};

using SpacePtr = std::shared_ptr<const StateSpace>;

/// Throws InvalidStructure on duplicate state names.
SpacePtr make_space(std::string name, std::vector<std::string> states);

/// Spaces are compared structurally; two spaces built from the same name and
/// state list are interchangeable.
bool same_space(const SpacePtr& a, const SpacePtr& b);
void require_same_space(const SpacePtr& a, const SpacePtr& b, const char* op);

/// Cartesian product in row-major order: (i, j) has index i * |b| + j.
SpacePtr product_space(const SpacePtr& a, const SpacePtr& b);

class Subset {
public:
  explicit Subset(SpacePtr space);
  Subset(SpacePtr space, std::initializer_list<StateIndex> members);
  Subset(SpacePtr space, const std::vector<StateIndex>& members);

  static Subset full(SpacePtr space);
  /// Bit i of `mask` selects state i. Requires |space| <= 64.
  static Subset from_mask(SpacePtr space, std::uint64_t mask);

  const SpacePtr& space() const noexcept { return space_; }
  std::size_t universe_size() const noexcept { return n_; }

  bool contains(StateIndex s) const {
    return (words_[s >> 6] >> (s & 63)) & 1u;
  }
  void insert(StateIndex s) { words_[s >> 6] |= std::uint64_t{1} << (s & 63); }
  void erase(StateIndex s) { words_[s >> 6] &= ~(std::uint64_t{1} << (s & 63)); }

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_full() const noexcept;
  std::vector<StateIndex> members() const;
  std::optional<StateIndex> first() const noexcept;
  std::uint64_t mask() const;

  Subset complement() const;
  Subset& operator|=(const Subset& o);
  Subset& operator&=(const Subset& o);
  Subset& operator-=(const Subset& o);

  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }
  friend bool operator==(const Subset& a, const Subset& b);

  /// this ⊆ o
  bool subset_of(const Subset& o) const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int bit = __builtin_ctzll(bits);
        f(static_cast<StateIndex>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

private:
  SpacePtr space_;
  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

/// Least-index witness of U ⋒ V, or nothing when disjoint.
std::optional<StateIndex> overlap(const Subset& u, const Subset& v);
bool included(const Subset& u, const Subset& v);

/// Renders "{s0,s1}" using the space's state names.
std::string to_string(const Subset& u);

class Relation {
public:
  Relation(SpacePtr domain, SpacePtr codomain);

  static Relation identity(SpacePtr space);
  static Relation full(SpacePtr domain, SpacePtr codomain);
  static Relation from_pairs(SpacePtr domain, SpacePtr codomain,
                             const std::vector<std::pair<StateIndex, StateIndex>>& pairs);

  const SpacePtr& domain() const noexcept { return domain_; }
  const SpacePtr& codomain() const noexcept { return codomain_; }

  bool contains(StateIndex a, StateIndex b) const { return rows_[a].contains(b); }
  void insert(StateIndex a, StateIndex b) { rows_[a].insert(b); }
  void erase(StateIndex a, StateIndex b) { rows_[a].erase(b); }

  /// R(s): the row of s, a subset of the codomain.
  const Subset& row(StateIndex a) const { return rows_[a]; }
  Subset& row(StateIndex a) { return rows_[a]; }

  /// Direct image R(U) = {b | ∃a ∈ U. a R b}.
  Subset image(const Subset& u) const;
  /// Inverse image R˘(V) = {a | R(a) ⋒ V}.
  Subset preimage(const Subset& v) const;

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  std::vector<std::pair<StateIndex, StateIndex>> pairs() const;

  Relation converse() const;
  /// Least reflexive-transitive superset. Requires an endo-relation.
  Relation rtc() const;
  bool is_reflexive() const;
  bool is_transitive() const;

  Relation& operator|=(const Relation& o);
  Relation& operator&=(const Relation& o);
  friend Relation operator|(Relation a, const Relation& b) { return a |= b; }
  friend Relation operator&(Relation a, const Relation& b) { return a &= b; }
  friend bool operator==(const Relation& a, const Relation& b);

  bool subset_of(const Relation& o) const;

private:
  SpacePtr domain_;
  SpacePtr codomain_;
  std::vector<Subset> rows_;
};

/// Q ; R, requires codomain(Q) = domain(R).
Relation compose(const Relation& q, const Relation& r);

/// Post-division Q / R for Q ⊆ S1×S3, R ⊆ S2×S3:
/// (s1,s2) ∈ Q/R  ⇔  R(s2) ⊆ Q(s1). Right adjoint of (_ ; R).
Relation post_divide(const Relation& q, const Relation& r);

/// Pre-division R \ Q for R ⊆ S1×S2, Q ⊆ S1×S3, defined as (Q˘ / R˘)˘.
/// Right adjoint of (R ; _).
Relation pre_divide(const Relation& r, const Relation& q);

std::string to_string(const Relation& r);

}  // namespace ix
