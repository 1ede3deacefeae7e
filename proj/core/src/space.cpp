#include "ix/space.hpp"

#include <algorithm>
#include <unordered_set>

#include "ix/error.hpp"

namespace ix {

StateSpace::StateSpace(std::string name, std::vector<std::string> states)
    : name_(std::move(name)), states_(std::move(states)) {
  std::unordered_set<std::string> seen;
  for (const auto& s : states_) {
    if (!seen.insert(s).second) {
      throw InvalidStructure("space '" + name_ + "': duplicate state '" + s + "'");
    }
  }
}

std::optional<StateIndex> StateSpace::index_of(const std::string& state) const {
  auto it = std::find(states_.begin(), states_.end(), state);
  if (it == states_.end()) return std::nullopt;
  return static_cast<StateIndex>(it - states_.begin());
}

SpacePtr make_space(std::string name, std::vector<std::string> states) {
  return std::make_shared<const StateSpace>(std::move(name), std::move(states));
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_space(const SpacePtr& a, const SpacePtr& b, const char* op) {
  if (!same_space(a, b)) {
    throw SpaceMismatch(std::string(op) + ": space mismatch ('" + (a ? a->name() : "?") +
                        "' vs '" + (b ? b->name() : "?") + "')");
  }
}

SpacePtr product_space(const SpacePtr& a, const SpacePtr& b) {
  std::vector<std::string> states;
  states.reserve(a->size() * b->size());
  for (const auto& x : a->states()) {
    for (const auto& y : b->states()) states.push_back("(" + x + "," + y + ")");
  }
  return make_space(a->name() + "*" + b->name(), std::move(states));
}

// --- Subset -----------------------------------------------------------------

Subset::Subset(SpacePtr space)
    : space_(std::move(space)), n_(space_->size()), words_((n_ + 63) / 64, 0) {}

Subset::Subset(SpacePtr space, std::initializer_list<StateIndex> members)
    : Subset(std::move(space)) {
  for (auto s : members) insert(s);
}

Subset::Subset(SpacePtr space, const std::vector<StateIndex>& members)
    : Subset(std::move(space)) {
  for (auto s : members) insert(s);
}

Subset Subset::full(SpacePtr space) {
  Subset u(std::move(space));
  for (std::size_t s = 0; s < u.n_; ++s) u.insert(s);
  return u;
}

Subset Subset::from_mask(SpacePtr space, std::uint64_t mask) {
  Subset u(std::move(space));
  if (u.n_ > 64) throw Error("Subset::from_mask: space larger than 64 states");
  if (u.n_ < 64) mask &= (std::uint64_t{1} << u.n_) - 1;
  if (!u.words_.empty()) u.words_[0] = mask;
  return u;
}

std::size_t Subset::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

bool Subset::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool Subset::is_full() const noexcept { return count() == n_; }

std::vector<StateIndex> Subset::members() const {
  std::vector<StateIndex> out;
  for_each([&](StateIndex s) { out.push_back(s); });
  return out;
}

std::optional<StateIndex> Subset::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w]) return w * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[w]));
  }
  return std::nullopt;
}

std::uint64_t Subset::mask() const {
  if (n_ > 64) throw Error("Subset::mask: space larger than 64 states");
  return words_.empty() ? 0 : words_[0];
}

Subset Subset::complement() const {
  Subset out(space_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = ~words_[w];
  if (n_ % 64) out.words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  return out;
}

Subset& Subset::operator|=(const Subset& o) {
  require_same_space(space_, o.space_, "union");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
  return *this;
}

Subset& Subset::operator&=(const Subset& o) {
  require_same_space(space_, o.space_, "intersection");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
  return *this;
}

Subset& Subset::operator-=(const Subset& o) {
  require_same_space(space_, o.space_, "difference");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
  return *this;
}

bool operator==(const Subset& a, const Subset& b) {
  return same_space(a.space_, b.space_) && a.words_ == b.words_;
}

bool Subset::subset_of(const Subset& o) const {
  require_same_space(space_, o.space_, "inclusion");
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~o.words_[w]) return false;
  }
  return true;
}

std::optional<StateIndex> overlap(const Subset& u, const Subset& v) {
  return (u & v).first();
}

bool included(const Subset& u, const Subset& v) { return u.subset_of(v); }

std::string to_string(const Subset& u) {
  std::string out = "{";
  bool first = true;
  u.for_each([&](StateIndex s) {
    if (!first) out += ',';
    out += u.space()->state_name(s);
    first = false;
  });
  return out + "}";
}

// --- Relation ---------------------------------------------------------------

Relation::Relation(SpacePtr domain, SpacePtr codomain)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  rows_.assign(domain_->size(), Subset(codomain_));
}

Relation Relation::identity(SpacePtr space) {
  Relation r(space, space);
  for (std::size_t s = 0; s < space->size(); ++s) r.insert(s, s);
  return r;
}

Relation Relation::full(SpacePtr domain, SpacePtr codomain) {
  Relation r(domain, codomain);
  for (auto& row : r.rows_) row = Subset::full(codomain);
  return r;
}

Relation Relation::from_pairs(SpacePtr domain, SpacePtr codomain,
                              const std::vector<std::pair<StateIndex, StateIndex>>& pairs) {
  Relation r(std::move(domain), std::move(codomain));
  for (auto [a, b] : pairs) r.insert(a, b);
  return r;
}

Subset Relation::image(const Subset& u) const {
  require_same_space(domain_, u.space(), "image");
  Subset out(codomain_);
  u.for_each([&](StateIndex a) { out |= rows_[a]; });
  return out;
}

Subset Relation::preimage(const Subset& v) const {
  require_same_space(codomain_, v.space(), "preimage");
  Subset out(domain_);
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    if (overlap(rows_[a], v)) out.insert(a);
  }
  return out;
}

std::size_t Relation::count() const noexcept {
  std::size_t c = 0;
  for (const auto& row : rows_) c += row.count();
  return c;
}

bool Relation::empty() const noexcept {
  return std::all_of(rows_.begin(), rows_.end(), [](const Subset& r) { return r.empty(); });
}

std::vector<std::pair<StateIndex, StateIndex>> Relation::pairs() const {
  std::vector<std::pair<StateIndex, StateIndex>> out;
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    rows_[a].for_each([&](StateIndex b) { out.emplace_back(a, b); });
  }
  return out;
}

Relation Relation::converse() const {
  Relation out(codomain_, domain_);
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    rows_[a].for_each([&](StateIndex b) { out.insert(b, a); });
  }
  return out;
}

Relation Relation::rtc() const {
  require_same_space(domain_, codomain_, "rtc");
  // Row-wise worklist closure: row(a) grows until closed under successors.
  Relation out = *this | identity(domain_);
  const std::size_t n = rows_.size();
  for (std::size_t a = 0; a < n; ++a) {
    Subset done(codomain_);
    std::vector<StateIndex> todo = out.rows_[a].members();
    while (!todo.empty()) {
      const StateIndex b = todo.back();
      todo.pop_back();
      if (done.contains(b)) continue;
      done.insert(b);
      rows_[b].for_each([&](StateIndex c) {
        if (!out.rows_[a].contains(c)) {
          out.rows_[a].insert(c);
          todo.push_back(c);
        }
      });
    }
  }
  return out;
}

bool Relation::is_reflexive() const {
  if (!same_space(domain_, codomain_)) return false;
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    if (!rows_[a].contains(a)) return false;
  }
  return true;
}

bool Relation::is_transitive() const {
  if (!same_space(domain_, codomain_)) return false;
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    if (!image(rows_[a]).subset_of(rows_[a])) return false;
  }
  return true;
}

Relation& Relation::operator|=(const Relation& o) {
  require_same_space(domain_, o.domain_, "relation union");
  require_same_space(codomain_, o.codomain_, "relation union");
  for (std::size_t a = 0; a < rows_.size(); ++a) rows_[a] |= o.rows_[a];
  return *this;
}

Relation& Relation::operator&=(const Relation& o) {
  require_same_space(domain_, o.domain_, "relation intersection");
  require_same_space(codomain_, o.codomain_, "relation intersection");
  for (std::size_t a = 0; a < rows_.size(); ++a) rows_[a] &= o.rows_[a];
  return *this;
}

bool operator==(const Relation& a, const Relation& b) {
  return same_space(a.domain_, b.domain_) && same_space(a.codomain_, b.codomain_) &&
         a.rows_ == b.rows_;
}

bool Relation::subset_of(const Relation& o) const {
  require_same_space(domain_, o.domain_, "relation inclusion");
  require_same_space(codomain_, o.codomain_, "relation inclusion");
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    if (!rows_[a].subset_of(o.rows_[a])) return false;
  }
  return true;
}

Relation compose(const Relation& q, const Relation& r) {
  require_same_space(q.codomain(), r.domain(), "compose");
  Relation out(q.domain(), r.codomain());
  for (std::size_t a = 0; a < q.domain()->size(); ++a) out.row(a) = r.image(q.row(a));
  return out;
}

Relation post_divide(const Relation& q, const Relation& r) {
  require_same_space(q.codomain(), r.codomain(), "post_divide");
  Relation out(q.domain(), r.domain());
  for (std::size_t s1 = 0; s1 < q.domain()->size(); ++s1) {
    for (std::size_t s2 = 0; s2 < r.domain()->size(); ++s2) {
      if (r.row(s2).subset_of(q.row(s1))) out.insert(s1, s2);
    }
  }
  return out;
}

Relation pre_divide(const Relation& r, const Relation& q) {
  require_same_space(r.domain(), q.domain(), "pre_divide");
  return post_divide(q.converse(), r.converse()).converse();
}

std::string to_string(const Relation& r) {
  std::string out = "{";
  bool first = true;
  for (auto [a, b] : r.pairs()) {
    if (!first) out += ',';
    out += "(" + r.domain()->state_name(a) + "," + r.codomain()->state_name(b) + ")";
    first = false;
  }
  return out + "}";
}

}  // namespace ix
