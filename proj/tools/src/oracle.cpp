#include "ixcli/oracle.hpp"

#include <map>

#include "ix/transition.hpp"

namespace ix::oracle {

namespace {

std::uint64_t subsets_of(const SpacePtr& sp) { return std::uint64_t{1} << sp->size(); }

}  // namespace

Subset angel(const InteractionStructure& w, const Subset& u) {
  const StructureData& data = w.data();
  Subset out(data.source);
  for (std::size_t s = 0; s < data.commands.size(); ++s) {
    for (const Command& c : data.commands[s]) {
      bool all = true;
      for (const Response& r : c.responses) all = all && u.contains(r.next);
      if (all) {
        out.insert(s);
        break;
      }
    }
  }
  return out;
}

Subset demon(const InteractionStructure& w, const Subset& u) {
  const StructureData& data = w.data();
  Subset out(data.source);
  for (std::size_t s = 0; s < data.commands.size(); ++s) {
    bool every = true;
    for (const Command& c : data.commands[s]) {
      bool some = false;
      for (const Response& r : c.responses) some = some || u.contains(r.next);
      every = every && some;
    }
    if (every) out.insert(s);
  }
  return out;
}

namespace {

struct TreeSearch {
  const StructureData& data;
  const Subset& goal;
  bool memo;
  std::map<std::pair<StateIndex, std::size_t>, bool> failed;

  std::optional<ClientTree> go(StateIndex s, std::size_t depth) {
    if (goal.contains(s)) return ClientTree::exit();
    if (depth == 0) return std::nullopt;
    if (memo && failed.count({s, depth})) return std::nullopt;
    for (std::size_t a = 0; a < data.commands[s].size(); ++a) {
      std::vector<ClientTree> branches;
      bool ok = true;
      for (const Response& r : data.commands[s][a].responses) {
        auto sub = go(r.next, depth - 1);
        if (!sub) {
          ok = false;
          break;
        }
        branches.push_back(std::move(*sub));
      }
      if (ok) return ClientTree::call(a, std::move(branches));
    }
    if (memo) failed[{s, depth}] = true;
    return std::nullopt;
  }
};

bool exits_in(const StructureData& data, StateIndex s, const ClientTree& t, const Subset& goal) {
  if (t.is_exit()) return goal.contains(s);
  const Command& c = data.commands[s][*t.command];
  if (t.branches.size() != c.responses.size()) return false;
  for (std::size_t d = 0; d < c.responses.size(); ++d) {
    if (!exits_in(data, c.responses[d].next, t.branches[d], goal)) return false;
  }
  return true;
}

}  // namespace

std::optional<ClientTree> find_tree(const InteractionStructure& w, StateIndex s,
                                    const Subset& goal, std::size_t depth, bool memo) {
  TreeSearch search{w.data(), goal, memo, {}};
  for (std::size_t k = 0; k <= depth; ++k) {
    auto t = search.go(s, k);
    if (t) {
      if (!exits_in(w.data(), s, *t, goal)) return std::nullopt;
      return t;
    }
  }
  return std::nullopt;
}

Subset tree_roots(const InteractionStructure& w, const Subset& goal, bool memo) {
  Subset out(w.source());
  for (std::size_t s = 0; s < w.source()->size(); ++s) {
    if (find_tree(w, s, goal, w.source()->size(), memo)) out.insert(s);
  }
  return out;
}

Subset least_saturated(const InteractionStructure& w, const Subset& u) {
  Subset best = Subset::full(w.source());
  for (std::uint64_t m = 0; m < subsets_of(w.source()); ++m) {
    const Subset x = Subset::from_mask(w.source(), m);
    if (u.subset_of(x) && angel(w, x).subset_of(x)) best &= x;
  }
  return best;
}

Subset greatest_invariant(const InteractionStructure& w, const Subset& v) {
  Subset best(w.source());
  for (std::uint64_t m = 0; m < subsets_of(w.source()); ++m) {
    const Subset x = Subset::from_mask(w.source(), m);
    if (x.subset_of(v) && x.subset_of(demon(w, x))) best |= x;
  }
  return best;
}

Relation path_closure(const Relation& r) {
  const SpacePtr& sp = r.domain();
  Relation out(sp, sp);
  for (std::size_t s = 0; s < sp->size(); ++s) {
    std::vector<StateIndex> stack{s};
    out.insert(s, s);
    while (!stack.empty()) {
      const StateIndex x = stack.back();
      stack.pop_back();
      for (StateIndex y = 0; y < sp->size(); ++y) {
        if (r.contains(x, y) && !out.contains(s, y)) {
          out.insert(s, y);
          stack.push_back(y);
        }
      }
    }
  }
  return out;
}

bool is_linear_sim(const InteractionStructure& w_high, const InteractionStructure& w_low,
                   const Relation& r) {
  const StructureData& hi = w_high.data();
  const StructureData& lo = w_low.data();
  for (std::size_t h = 0; h < hi.commands.size(); ++h) {
    for (std::size_t l = 0; l < lo.commands.size(); ++l) {
      if (!r.contains(h, l)) continue;
      for (const Command& ah : hi.commands[h]) {
        bool exists_al = false;
        for (const Command& al : lo.commands[l]) {
          bool all_dl = true;
          for (const Response& dl : al.responses) {
            bool exists_dh = false;
            for (const Response& dh : ah.responses) {
              exists_dh = exists_dh || r.contains(dh.next, dl.next);
            }
            all_dl = all_dl && exists_dh;
          }
          exists_al = exists_al || all_dl;
        }
        if (!exists_al) return false;
      }
    }
  }
  return true;
}

bool is_general_sim(const InteractionStructure& w_high, const InteractionStructure& w_low,
                    const Relation& r) {
  const StructureData& hi = w_high.data();
  for (std::size_t h = 0; h < hi.commands.size(); ++h) {
    for (std::size_t l = 0; l < w_low.source()->size(); ++l) {
      if (!r.contains(h, l)) continue;
      for (const Command& ah : hi.commands[h]) {
        Subset target(w_low.source());
        for (const Response& dh : ah.responses) target |= r.row(dh.next);
        if (!find_tree(w_low, l, target, w_low.source()->size())) return false;
      }
    }
  }
  return true;
}

bool is_subcommutative(const InteractionStructure& w_high, const InteractionStructure& w_low,
                       const Relation& r) {
  for (std::uint64_t m = 0; m < subsets_of(w_high.source()); ++m) {
    const Subset u = Subset::from_mask(w_high.source(), m);
    if (!r.image(angel(w_high, u)).subset_of(angel(w_low, r.image(u)))) return false;
  }
  return true;
}

bool galois_holds(const Relation& r) {
  const Relation conv = r.converse();
  for (std::uint64_t mu = 0; mu < subsets_of(r.domain()); ++mu) {
    const Subset u = Subset::from_mask(r.domain(), mu);
    const Subset lhs = angelic_update(conv, u);
    for (std::uint64_t mv = 0; mv < subsets_of(r.codomain()); ++mv) {
      const Subset v = Subset::from_mask(r.codomain(), mv);
      if (lhs.subset_of(v) != u.subset_of(demonic_update(r, v))) return false;
    }
  }
  return true;
}

}  // namespace ix::oracle
