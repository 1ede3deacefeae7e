#include "ix/programs.hpp"

#include <algorithm>
#include <tuple>

#include "ix/error.hpp"

namespace ix {

namespace {

std::string where(const InteractionStructure& w, StateIndex s) {
  return "'" + w.source()->state_name(s) + "'";
}

void collect_exits(const InteractionStructure& w, StateIndex s, const ClientTree& t,
                   std::vector<ResponseIndex>& path, std::vector<ClientExit>& out) {
  if (t.is_exit()) {
    out.push_back({path, s});
    return;
  }
  const CommandIndex a = *t.command;
  if (a >= w.command_count(s)) {
    throw MalformedProgram("client tree: command #" + std::to_string(a) + " not available at " +
                           where(w, s));
  }
  if (t.branches.size() != w.response_count(s, a)) {
    throw MalformedProgram("client tree: command '" + w.command(s, a).name + "' at " + where(w, s) +
                           " has " + std::to_string(w.response_count(s, a)) + " responses but " +
                           std::to_string(t.branches.size()) + " branches");
  }
  for (std::size_t d = 0; d < t.branches.size(); ++d) {
    path.push_back(d);
    collect_exits(w, w.next(s, a, d), t.branches[d], path, out);
    path.pop_back();
  }
}

}  // namespace

std::size_t ClientTree::depth() const {
  std::size_t deepest = 0;
  for (const auto& b : branches) deepest = std::max(deepest, b.depth());
  return is_exit() ? 0 : deepest + 1;
}

std::vector<ClientExit> client_exits(const InteractionStructure& w, StateIndex root,
                                     const ClientTree& tree) {
  require_homogeneous(w, "client_exits");
  if (root >= w.source()->size()) throw MalformedProgram("client tree: root out of range");
  std::vector<ClientExit> out;
  std::vector<ResponseIndex> path;
  collect_exits(w, root, tree, path, out);
  return out;
}

bool verify_client(const InteractionStructure& w, const ClientProgram& p, const Subset& goal) {
  require_same_space(w.source(), goal.space(), "verify_client");
  const auto exits = client_exits(w, p.root, p.tree);
  return std::all_of(exits.begin(), exits.end(),
                     [&](const ClientExit& e) { return goal.contains(e.state); });
}

ClientTree tree_from_cover(const InteractionStructure& w, const CoverResult& cov, StateIndex s) {
  if (!cov.stage.at(s)) {
    throw NotCovered(s, "state " + where(w, s) + " is not covered");
  }
  if (*cov.stage[s] == 0) return ClientTree::exit();
  const CommandIndex a = *cov.witness[s];
  std::vector<ClientTree> branches;
  branches.reserve(w.response_count(s, a));
  for (std::size_t d = 0; d < w.response_count(s, a); ++d) {
    branches.push_back(tree_from_cover(w, cov, w.next(s, a, d)));
  }
  return ClientTree::call(a, std::move(branches));
}

ClientProgram synth_client(const InteractionStructure& w, StateIndex s, const Subset& goal) {
  const CoverResult cov = cover(w, goal);
  if (!cov.subset.contains(s)) {
    throw NotCovered(s, "state " + where(w, s) + " is not covered by " + to_string(goal));
  }
  return ClientProgram{s, tree_from_cover(w, cov, s)};
}

ServerSynthesis synth_server(const InteractionStructure& w, const Subset& maintain) {
  InteriorResult in = interior(w, maintain);
  ServerSynthesis out{ServerProgram{in.subset, std::move(in.choice)}, false};
  out.empty_invariant = out.server.inv.empty();
  return out;
}

std::optional<ServerViolation> verify_server(const InteractionStructure& w,
                                             const ServerProgram& srv) {
  require_homogeneous(w, "verify_server");
  require_same_space(w.source(), srv.inv.space(), "verify_server");
  std::optional<ServerViolation> found;
  srv.inv.for_each([&](StateIndex s) {
    if (found) return;
    for (std::size_t a = 0; a < w.command_count(s); ++a) {
      const bool has_row = s < srv.choice.size() && a < srv.choice[s].size();
      if (!has_row || !srv.choice[s][a]) {
        found = ServerViolation{s, a, "no response chosen"};
        return;
      }
      const ResponseIndex d = *srv.choice[s][a];
      if (d >= w.response_count(s, a)) {
        found = ServerViolation{s, a, "chosen response out of range"};
        return;
      }
      const StateIndex next = w.next(s, a, d);
      if (!srv.inv.contains(next)) {
        found = ServerViolation{s, a, "next state '" + w.source()->state_name(next) +
                                          "' leaves the invariant"};
        return;
      }
    }
  });
  return found;
}

std::vector<ResponseIndex> Trace::responses() const {
  std::vector<ResponseIndex> out;
  out.reserve(steps.size());
  for (const auto& st : steps) out.push_back(st.response);
  return out;
}

bool replay(const InteractionStructure& w, const Trace& trace) {
  StateIndex at = trace.start;
  for (const auto& st : trace.steps) {
    if (st.state != at || st.command >= w.command_count(at) ||
        st.response >= w.response_count(at, st.command) ||
        w.next(at, st.command, st.response) != st.next) {
      return false;
    }
    at = st.next;
  }
  return at == trace.final_state;
}

Trace exec(const InteractionStructure& w, StateIndex s, const ClientTree& p,
           const ServerProgram& srv) {
  require_homogeneous(w, "exec");
  require_same_space(w.source(), srv.inv.space(), "exec");
  if (s >= w.source()->size() || !srv.inv.contains(s)) {
    throw ContractViolation("exec: start state " +
                            (s < w.source()->size() ? where(w, s) : std::string("?")) +
                            " is outside the server invariant");
  }
  Trace trace{s, {}, s};
  const ClientTree* node = &p;
  StateIndex at = s;
  while (!node->is_exit()) {
    const CommandIndex a = *node->command;
    if (a >= w.command_count(at) || node->branches.size() != w.response_count(at, a)) {
      throw MalformedProgram("exec: client tree does not fit the structure at " + where(w, at));
    }
    const bool has = at < srv.choice.size() && a < srv.choice[at].size() && srv.choice[at][a];
    if (!has || *srv.choice[at][a] >= w.response_count(at, a)) {
      throw ContractViolation("exec: server has no response for '" + w.command(at, a).name +
                              "' at " + where(w, at));
    }
    const ResponseIndex d = *srv.choice[at][a];
    const StateIndex next = w.next(at, a, d);
    if (!srv.inv.contains(next)) {
      throw ContractViolation("exec: server response '" + w.command(at, a).responses[d].name +
                              "' at " + where(w, at) + " leaves the invariant");
    }
    trace.steps.push_back({at, a, d, next});
    at = next;
    node = &node->branches[d];
  }
  trace.final_state = at;
  return trace;
}

// --- certificates ------------------------------------------------------------

const char* to_string(SimKind kind) {
  switch (kind) {
    case SimKind::linear:
      return "linear";
    case SimKind::affine:
      return "affine";
    case SimKind::tc:
      return "tc";
    case SimKind::general:
      return "general";
  }
  return "?";
}

std::optional<SimKind> parse_sim_kind(const std::string& text) {
  if (text == "linear") return SimKind::linear;
  if (text == "affine") return SimKind::affine;
  if (text == "tc") return SimKind::tc;
  if (text == "general") return SimKind::general;
  return std::nullopt;
}

const SimWitness* SimCert::find(StateIndex high, StateIndex low, CommandIndex command) const {
  auto key = [](const SimWitness& x) { return std::tuple(x.high, x.low, x.command); };
  auto it = std::lower_bound(
      witnesses.begin(), witnesses.end(), std::tuple(high, low, command),
      [&](const SimWitness& x, const auto& k) { return key(x) < k; });
  if (it == witnesses.end() || key(*it) != std::tuple(high, low, command)) return nullptr;
  return &*it;
}

std::optional<std::string> verify_cert(const InteractionStructure& w_high,
                                       const InteractionStructure& w_low, const SimCert& cert) {
  require_same_space(w_high.source(), cert.relation.domain(), "verify_cert");
  require_same_space(w_low.source(), cert.relation.codomain(), "verify_cert");
  const auto& hs = *w_high.source();
  const auto& ls = *w_low.source();
  for (auto [h, l] : cert.relation.pairs()) {
    for (std::size_t a = 0; a < w_high.command_count(h); ++a) {
      const std::string at = "(" + hs.state_name(h) + "," + ls.state_name(l) + "," +
                             w_high.command(h, a).name + ")";
      const SimWitness* wit = cert.find(h, l, a);
      if (!wit) return "missing witness at " + at;
      std::vector<ClientExit> exits;
      try {
        exits = client_exits(w_low, l, wit->program);
      } catch (const MalformedProgram& e) {
        return "malformed witness at " + at + ": " + e.what();
      }
      const std::size_t depth = wit->program.depth();
      const bool depth_ok = cert.kind == SimKind::general ||
                            (cert.kind == SimKind::linear && depth == 1) ||
                            (cert.kind == SimKind::affine && depth <= 1) ||
                            (cert.kind == SimKind::tc && depth >= 1);
      if (!depth_ok) return "witness at " + at + " has the wrong shape for a " +
                            to_string(cert.kind) + " simulation";
      if (exits.size() != wit->exits.size()) return "exit map at " + at + " is not total";
      for (std::size_t i = 0; i < exits.size(); ++i) {
        if (exits[i].path != wit->exits[i].first) return "exit map at " + at + " is out of order";
        const ResponseIndex dh = wit->exits[i].second;
        if (dh >= w_high.response_count(h, a)) return "exit map at " + at + " names a bad response";
        if (!cert.relation.contains(w_high.next(h, a, dh), exits[i].state)) {
          return "exit at " + at + " is not related to the high-level successor";
        }
      }
    }
  }
  return std::nullopt;
}

AcrossResult exec_across(const InteractionStructure& w_high, const InteractionStructure& w_low,
                         const SimCert& cert, StateIndex s_high, StateIndex s_low,
                         const ClientTree& p, const ServerProgram& srv) {
  require_homogeneous(w_high, "exec_across");
  require_homogeneous(w_low, "exec_across");
  require_same_space(w_high.source(), cert.relation.domain(), "exec_across");
  require_same_space(w_low.source(), cert.relation.codomain(), "exec_across");
  if (s_high >= w_high.source()->size() || s_low >= w_low.source()->size() ||
      !cert.relation.contains(s_high, s_low)) {
    throw ContractViolation("exec_across: start pair is not related by the certificate");
  }
  if (!srv.inv.contains(s_low)) {
    throw ContractViolation("exec_across: low start state is outside the server invariant");
  }

  AcrossResult r{s_high, s_low, Trace{s_high, {}, s_high}, Trace{s_low, {}, s_low}};
  const ClientTree* node = &p;
  while (!node->is_exit()) {
    const StateIndex h = r.final_high;
    const StateIndex l = r.final_low;
    const CommandIndex a = *node->command;
    if (a >= w_high.command_count(h) || node->branches.size() != w_high.response_count(h, a)) {
      throw MalformedProgram("exec_across: client tree does not fit '" + w_high.name() + "' at '" +
                             w_high.source()->state_name(h) + "'");
    }
    const SimWitness* wit = cert.find(h, l, a);
    if (!wit) {
      throw MissingWitness("exec_across: certificate has no witness for (" +
                           w_high.source()->state_name(h) + "," + w_low.source()->state_name(l) +
                           "," + w_high.command(h, a).name + ")");
    }
    const Trace low = exec(w_low, l, wit->program, srv);
    const auto path = low.responses();
    auto hit = std::find_if(wit->exits.begin(), wit->exits.end(),
                            [&](const auto& e) { return e.first == path; });
    if (hit == wit->exits.end()) {
      throw MissingWitness("exec_across: witness exit map has no entry for the executed path");
    }
    const ResponseIndex dh = hit->second;
    if (dh >= w_high.response_count(h, a)) {
      throw ContractViolation("exec_across: exit map names a response out of range");
    }
    const StateIndex h_next = w_high.next(h, a, dh);
    if (!cert.relation.contains(h_next, low.final_state)) {
      throw ContractViolation("exec_across: exit state is not related to the high-level successor");
    }
    r.low.steps.insert(r.low.steps.end(), low.steps.begin(), low.steps.end());
    r.high.steps.push_back({h, a, dh, h_next});
    r.final_high = h_next;
    r.final_low = low.final_state;
    node = &node->branches[dh];
  }
  r.high.final_state = r.final_high;
  r.low.final_state = r.final_low;
  return r;
}

}  // namespace ix
