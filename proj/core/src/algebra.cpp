#include "ix/algebra.hpp"

#include <deque>
#include <map>
#include <string>

#include "ix/error.hpp"

namespace ix {

namespace {

constexpr const char* kMapsTo = "↦";  // ↦

/// Π radices, or throws once the running product passes `cap`.
std::size_t checked_product(const std::vector<std::size_t>& radices, std::size_t cap,
                            const std::string& what) {
  std::size_t total = 1;
  for (auto r : radices) {
    if (r == 0) return 0;
  }
  for (auto r : radices) {
    if (total > cap / r) {
      throw SizeCapExceeded(what + ": enumeration exceeds size cap " + std::to_string(cap));
    }
    total *= r;
  }
  if (total > cap) {
    throw SizeCapExceeded(what + ": enumeration exceeds size cap " + std::to_string(cap));
  }
  return total;
}

/// Calls f(digits) for every tuple with digits[i] < radices[i], first digit
/// most significant.
template <typename F>
void odometer(const std::vector<std::size_t>& radices, F&& f) {
  for (auto r : radices) {
    if (r == 0) return;
  }
  std::vector<std::size_t> digits(radices.size(), 0);
  while (true) {
    f(digits);
    std::size_t i = radices.size();
    while (i > 0) {
      --i;
      if (++digits[i] < radices[i]) break;
      digits[i] = 0;
      if (i == 0) return;
    }
    if (radices.empty()) return;
  }
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string state_name(const SpacePtr& sp, StateIndex s) { return sp->state_name(s); }

}  // namespace

InteractionStructure dual(const InteractionStructure& w, std::size_t cap) {
  StructureData out{"dual(" + w.name() + ")", w.source(), w.target(), {}};
  out.commands.resize(w.source()->size());
  for (std::size_t s = 0; s < w.source()->size(); ++s) {
    const auto& cmds = w.commands(s);
    std::vector<std::size_t> radices;
    for (const auto& c : cmds) radices.push_back(c.responses.size());
    checked_product(radices, cap, "dual at state '" + state_name(w.source(), s) + "'");
    odometer(radices, [&](const std::vector<std::size_t>& choice) {
      Command fn;
      std::vector<std::string> parts;
      for (std::size_t a = 0; a < cmds.size(); ++a) {
        parts.push_back(cmds[a].name + kMapsTo + cmds[a].responses[choice[a]].name);
        fn.responses.push_back({cmds[a].name, cmds[a].responses[choice[a]].next});
      }
      fn.name = parts.empty() ? "{}" : join(parts, ",");
      out.commands[s].push_back(std::move(fn));
    });
  }
  return InteractionStructure(std::move(out));
}

InteractionStructure skip(SpacePtr space) {
  StructureData out{"skip", space, space, {}};
  out.commands.resize(space->size());
  for (std::size_t s = 0; s < space->size(); ++s) {
    out.commands[s].push_back({"skip", {{"()", s}}});
  }
  return InteractionStructure(std::move(out));
}

InteractionStructure angelic_update(const TransitionStructure& t) {
  StructureData out{"angelic", t.source(), t.target(), {}};
  out.commands.resize(t.source()->size());
  for (std::size_t s = 0; s < t.source()->size(); ++s) {
    for (const auto& tr : t.at(s)) out.commands[s].push_back({tr.label, {{"()", tr.next}}});
  }
  return InteractionStructure(std::move(out));
}

InteractionStructure demonic_update(const TransitionStructure& t) {
  StructureData out{"demonic", t.source(), t.target(), {}};
  out.commands.resize(t.source()->size());
  for (std::size_t s = 0; s < t.source()->size(); ++s) {
    Command only{"()", {}};
    for (const auto& tr : t.at(s)) only.responses.push_back({tr.label, tr.next});
    out.commands[s].push_back(std::move(only));
  }
  return InteractionStructure(std::move(out));
}

InteractionStructure from_transition(const TransitionStructure& t, UpdateKind kind) {
  switch (kind) {
    case UpdateKind::skip:
      return skip(t.source());
    case UpdateKind::angelic:
      return angelic_update(t);
    case UpdateKind::demonic:
      return demonic_update(t);
  }
  throw Error("from_transition: unknown kind");
}

InteractionStructure union_all(const std::vector<InteractionStructure>& ws, SpacePtr source,
                               SpacePtr target) {
  std::vector<std::string> names;
  for (const auto& w : ws) {
    require_same_space(source, w.source(), "union_all");
    require_same_space(target, w.target(), "union_all");
    names.push_back(w.name());
  }
  StructureData out{"union(" + join(names, ",") + ")", source, target, {}};
  out.commands.resize(source->size());
  for (std::size_t s = 0; s < source->size(); ++s) {
    for (std::size_t i = 0; i < ws.size(); ++i) {
      for (const auto& c : ws[i].commands(s)) {
        out.commands[s].push_back({std::to_string(i) + ":" + c.name, c.responses});
      }
    }
  }
  return InteractionStructure(std::move(out));
}

InteractionStructure union_all(const std::vector<InteractionStructure>& ws) {
  if (ws.empty()) throw SpaceMismatch("union_all: empty family needs explicit spaces");
  return union_all(ws, ws.front().source(), ws.front().target());
}

InteractionStructure intersection_all(const std::vector<InteractionStructure>& ws,
                                      SpacePtr source, SpacePtr target, std::size_t cap) {
  std::vector<std::string> names;
  for (const auto& w : ws) {
    require_same_space(source, w.source(), "intersection_all");
    require_same_space(target, w.target(), "intersection_all");
    names.push_back(w.name());
  }
  StructureData out{"intersection(" + join(names, ",") + ")", source, target, {}};
  out.commands.resize(source->size());
  for (std::size_t s = 0; s < source->size(); ++s) {
    std::vector<std::size_t> radices;
    for (const auto& w : ws) radices.push_back(w.command_count(s));
    checked_product(radices, cap, "intersection_all at state '" + state_name(source, s) + "'");
    odometer(radices, [&](const std::vector<std::size_t>& pick) {
      Command tuple;
      std::vector<std::string> parts;
      for (std::size_t i = 0; i < ws.size(); ++i) {
        const Command& c = ws[i].command(s, pick[i]);
        parts.push_back(c.name);
        for (const auto& d : c.responses) {
          tuple.responses.push_back({std::to_string(i) + ":" + d.name, d.next});
        }
      }
      tuple.name = "(" + join(parts, ",") + ")";
      out.commands[s].push_back(std::move(tuple));
    });
  }
  return InteractionStructure(std::move(out));
}

InteractionStructure intersection_all(const std::vector<InteractionStructure>& ws,
                                      std::size_t cap) {
  if (ws.empty()) throw SpaceMismatch("intersection_all: empty family needs explicit spaces");
  return intersection_all(ws, ws.front().source(), ws.front().target(), cap);
}

InteractionStructure seq(const InteractionStructure& w1, const InteractionStructure& w2,
                         std::size_t cap) {
  require_same_space(w1.target(), w2.source(), "seq");
  StructureData out{w1.name() + ";" + w2.name(), w1.source(), w2.target(), {}};
  out.commands.resize(w1.source()->size());
  for (std::size_t s = 0; s < w1.source()->size(); ++s) {
    const std::string where = "seq at state '" + state_name(w1.source(), s) + "'";
    std::size_t total = 0;
    for (std::size_t a1 = 0; a1 < w1.command_count(s); ++a1) {
      const Command& c1 = w1.command(s, a1);
      std::vector<std::size_t> radices;
      for (const auto& d1 : c1.responses) radices.push_back(w2.command_count(d1.next));
      total += checked_product(radices, cap, where);
      if (total > cap) {
        throw SizeCapExceeded(where + ": enumeration exceeds size cap " + std::to_string(cap));
      }
      odometer(radices, [&](const std::vector<std::size_t>& f) {
        Command pair;
        std::vector<std::string> parts;
        for (std::size_t d1 = 0; d1 < c1.responses.size(); ++d1) {
          const StateIndex mid = c1.responses[d1].next;
          const Command& c2 = w2.command(mid, f[d1]);
          parts.push_back(c1.responses[d1].name + kMapsTo + c2.name);
          for (const auto& d2 : c2.responses) {
            pair.responses.push_back({"(" + c1.responses[d1].name + "," + d2.name + ")", d2.next});
          }
        }
        pair.name = "(" + c1.name + (parts.empty() ? "" : ", " + join(parts, ", ")) + ")";
        out.commands[s].push_back(std::move(pair));
      });
    }
  }
  return InteractionStructure(std::move(out));
}

InteractionStructure tensor(const InteractionStructure& w1, const InteractionStructure& w2,
                            std::size_t cap) {
  SpacePtr source = product_space(w1.source(), w2.source());
  SpacePtr target = w1.homogeneous() && w2.homogeneous()
                        ? source
                        : product_space(w1.target(), w2.target());
  const std::size_t n2 = w2.source()->size();
  const std::size_t m2 = w2.target()->size();
  StructureData out{w1.name() + "⊗" + w2.name(), source, target, {}};
  out.commands.resize(source->size());
  for (std::size_t s1 = 0; s1 < w1.source()->size(); ++s1) {
    for (std::size_t s2 = 0; s2 < n2; ++s2) {
      auto& cmds = out.commands[s1 * n2 + s2];
      checked_product({w1.command_count(s1), w2.command_count(s2)}, cap,
                      "tensor at state '" + source->state_name(s1 * n2 + s2) + "'");
      for (const auto& c1 : w1.commands(s1)) {
        for (const auto& c2 : w2.commands(s2)) {
          Command pair{"(" + c1.name + "," + c2.name + ")", {}};
          for (const auto& d1 : c1.responses) {
            for (const auto& d2 : c2.responses) {
              pair.responses.push_back({"(" + d1.name + "," + d2.name + ")", d1.next * m2 + d2.next});
            }
          }
          cmds.push_back(std::move(pair));
        }
      }
    }
  }
  return InteractionStructure(std::move(out));
}

InteractionStructure angelic_product(const InteractionStructure& w1,
                                     const InteractionStructure& w2) {
  require_homogeneous(w1, "angelic_product");
  require_homogeneous(w2, "angelic_product");
  SpacePtr space = product_space(w1.source(), w2.source());
  const std::size_t n2 = w2.source()->size();
  StructureData out{w1.name() + "⊙" + w2.name(), space, space, {}};
  out.commands.resize(space->size());
  for (std::size_t s1 = 0; s1 < w1.source()->size(); ++s1) {
    for (std::size_t s2 = 0; s2 < n2; ++s2) {
      auto& cmds = out.commands[s1 * n2 + s2];
      for (const auto& c1 : w1.commands(s1)) {
        Command tagged{"inl " + c1.name, {}};
        for (const auto& d : c1.responses) tagged.responses.push_back({d.name, d.next * n2 + s2});
        cmds.push_back(std::move(tagged));
      }
      for (const auto& c2 : w2.commands(s2)) {
        Command tagged{"inr " + c2.name, {}};
        for (const auto& d : c2.responses) tagged.responses.push_back({d.name, s1 * n2 + d.next});
        cmds.push_back(std::move(tagged));
      }
    }
  }
  return InteractionStructure(std::move(out));
}

Factorization factorize(const InteractionStructure& w) {
  std::vector<std::string> mid_names;
  std::vector<std::pair<StateIndex, CommandIndex>> mid_index;
  for (std::size_t s = 0; s < w.source()->size(); ++s) {
    for (std::size_t a = 0; a < w.command_count(s); ++a) {
      mid_names.push_back("(" + w.source()->state_name(s) + "," + w.command(s, a).name + ")");
      mid_index.emplace_back(s, a);
    }
  }
  SpacePtr mid = make_space("mid(" + w.name() + ")", std::move(mid_names));

  std::vector<std::vector<Transition>> ta(w.source()->size());
  std::size_t k = 0;
  for (std::size_t s = 0; s < w.source()->size(); ++s) {
    for (std::size_t a = 0; a < w.command_count(s); ++a) ta[s].push_back({w.command(s, a).name, k++});
  }
  std::vector<std::vector<Transition>> td(mid->size());
  for (std::size_t m = 0; m < mid_index.size(); ++m) {
    auto [s, a] = mid_index[m];
    for (const auto& d : w.command(s, a).responses) td[m].push_back({d.name, d.next});
  }
  return Factorization{mid, TransitionStructure(w.source(), mid, std::move(ta)),
                       TransitionStructure(mid, w.target(), std::move(td))};
}

TransitionStructure underlying_transitions(const InteractionStructure& w) {
  std::vector<std::vector<Transition>> rows(w.source()->size());
  for (std::size_t s = 0; s < rows.size(); ++s) {
    for (const auto& c : w.commands(s)) {
      for (const auto& d : c.responses) rows[s].push_back({c.name + "/" + d.name, d.next});
    }
  }
  return TransitionStructure(w.source(), w.target(), std::move(rows));
}

LocalizedStructure localize(const InteractionStructure& w, StateIndex init, std::size_t cap) {
  require_homogeneous(w, "localize");
  if (init >= w.source()->size()) throw Error("localize: initial state out of range");

  const SpacePtr& base = w.source();
  std::vector<Subset> carriers;
  std::map<std::vector<StateIndex>, std::size_t> index;
  auto intern = [&](const Subset& u) {
    auto key = u.members();
    auto [it, fresh] = index.emplace(key, carriers.size());
    if (fresh) {
      if (carriers.size() >= cap) {
        throw SizeCapExceeded("localize: reachable subset count exceeds size cap " +
                              std::to_string(cap));
      }
      carriers.push_back(u);
    }
    return it->second;
  };

  struct Pending {
    std::string name;
    std::vector<std::pair<StateIndex, std::string>> responses;  // next L-state, name
  };
  std::vector<std::vector<Pending>> cmds;

  intern(Subset(base, {init}));
  for (std::size_t l = 0; l < carriers.size(); ++l) {
    std::vector<Pending> here;
    const Subset log = carriers[l];
    log.for_each([&](StateIndex si) {
      for (const auto& c : w.commands(si)) {
        Pending p{"(" + base->state_name(si) + "," + c.name + ")", {}};
        for (const auto& d : c.responses) {
          Subset grown = log;
          grown.insert(d.next);
          p.responses.emplace_back(intern(grown), d.name);
        }
        here.push_back(std::move(p));
      }
    });
    cmds.push_back(std::move(here));
  }

  std::vector<std::string> names;
  for (const auto& c : carriers) names.push_back(to_string(c));
  SpacePtr lspace = make_space("L(" + w.name() + ")", std::move(names));
  StructureData out{"L(" + w.name() + ")", lspace, lspace, {}};
  out.commands.resize(carriers.size());
  for (std::size_t l = 0; l < carriers.size(); ++l) {
    for (auto& p : cmds[l]) {
      Command c{p.name, {}};
      for (auto& [next, name] : p.responses) c.responses.push_back({name, next});
      out.commands[l].push_back(std::move(c));
    }
  }

  Relation leq(lspace, lspace);
  for (std::size_t a = 0; a < carriers.size(); ++a) {
    for (std::size_t b = 0; b < carriers.size(); ++b) {
      if (carriers[b].subset_of(carriers[a])) leq.insert(a, b);
    }
  }
  return LocalizedStructure{InteractionStructure(std::move(out)), std::move(carriers),
                            std::move(leq)};
}

}  // namespace ix
