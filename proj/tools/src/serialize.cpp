#include "ixcli/serialize.hpp"

#include <set>

#include "ix/error.hpp"

namespace ix::cli {

namespace {

StateIndex state_named(const SpacePtr& sp, const Json& j) {
  if (!j.is_string()) throw Error("expected a state name, got " + j.dump());
  auto idx = sp->index_of(j.get<std::string>());
  if (!idx) throw Error("unknown state '" + j.get<std::string>() + "' in space '" + sp->name() + "'");
  return *idx;
}

CommandIndex command_named(const InteractionStructure& w, StateIndex s, const Json& j) {
  if (!j.is_string()) throw Error("expected a command name, got " + j.dump());
  auto a = w.find_command(s, j.get<std::string>());
  if (!a) {
    throw Error("state '" + w.source()->state_name(s) + "' has no command '" +
                j.get<std::string>() + "'");
  }
  return *a;
}

ResponseIndex response_named(const InteractionStructure& w, StateIndex s, CommandIndex a,
                             const Json& j) {
  if (!j.is_string()) throw Error("expected a response name, got " + j.dump());
  auto d = w.find_response(s, a, j.get<std::string>());
  if (!d) {
    throw Error("command '" + w.command(s, a).name + "' at '" + w.source()->state_name(s) +
                "' has no response '" + j.get<std::string>() + "'");
  }
  return *d;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json tree_to_json(const InteractionStructure& w, StateIndex root, const ClientTree& tree) {
  Json j = Json::object();
  if (tree.is_exit()) {
    j["exit"] = true;
    return j;
  }
  const CommandIndex a = *tree.command;
  if (a >= w.command_count(root) || tree.branches.size() != w.response_count(root, a)) {
    throw MalformedProgram("client tree does not fit the structure at '" +
                           w.source()->state_name(root) + "'");
  }
  j["call"] = w.command(root, a).name;
  Json br = Json::object();
  for (std::size_t d = 0; d < tree.branches.size(); ++d) {
    br[w.command(root, a).responses[d].name] = tree_to_json(w, w.next(root, a, d), tree.branches[d]);
  }
  j["branches"] = std::move(br);
  return j;
}

ClientTree tree_from_json(const InteractionStructure& w, StateIndex root, const Json& j) {
  if (!j.is_object()) throw Error("client node must be an object");
  if (j.contains("exit")) return ClientTree::exit();
  const CommandIndex a = command_named(w, root, field(j, "call"));
  const Json& br = field(j, "branches");
  if (!br.is_object() || br.size() != w.response_count(root, a)) {
    throw Error("branches of '" + w.command(root, a).name + "' at '" +
                w.source()->state_name(root) + "' must list every response");
  }
  std::vector<ClientTree> branches(w.response_count(root, a));
  std::set<ResponseIndex> seen;
  for (const auto& [name, node] : br.items()) {
    const ResponseIndex d = response_named(w, root, a, Json(name));
    seen.insert(d);
    branches[d] = tree_from_json(w, w.next(root, a, d), node);
  }
  if (seen.size() != branches.size()) throw Error("duplicate branch in client node");
  return ClientTree::call(a, std::move(branches));
}

Json client_to_json(const InteractionStructure& w, const ClientProgram& p) {
  Json j;
  j["istruct"] = w.name();
  j["root"] = w.source()->state_name(p.root);
  j["tree"] = tree_to_json(w, p.root, p.tree);
  return j;
}

ClientProgram client_from_json(const InteractionStructure& w, const Json& j) {
  const StateIndex root = state_named(w.source(), field(j, "root"));
  return ClientProgram{root, tree_from_json(w, root, field(j, "tree"))};
}

Json server_to_json(const InteractionStructure& w, const ServerProgram& srv) {
  Json j;
  j["istruct"] = w.name();
  Json inv = Json::array();
  srv.inv.for_each([&](StateIndex s) { inv.push_back(w.source()->state_name(s)); });
  j["inv"] = std::move(inv);
  Json choice = Json::array();
  for (std::size_t s = 0; s < srv.choice.size(); ++s) {
    for (std::size_t a = 0; a < srv.choice[s].size(); ++a) {
      if (!srv.choice[s][a]) continue;
      Json row;
      row["state"] = w.source()->state_name(s);
      row["command"] = w.command(s, a).name;
      row["response"] = w.command(s, a).responses[*srv.choice[s][a]].name;
      choice.push_back(std::move(row));
    }
  }
  j["choice"] = std::move(choice);
  return j;
}

ServerProgram server_from_json(const InteractionStructure& w, const Json& j) {
  const SpacePtr& sp = w.source();
  ServerProgram srv{Subset(sp), {}};
  srv.choice.resize(sp->size());
  for (std::size_t s = 0; s < sp->size(); ++s) srv.choice[s].resize(w.command_count(s));
  const Json& inv = field(j, "inv");
  if (!inv.is_array()) throw Error("'inv' must be an array");
  for (const Json& s : inv) srv.inv.insert(state_named(sp, s));
  const Json& choice = field(j, "choice");
  if (!choice.is_array()) throw Error("'choice' must be an array");
  for (const Json& row : choice) {
    const StateIndex s = state_named(sp, field(row, "state"));
    const CommandIndex a = command_named(w, s, field(row, "command"));
    if (srv.choice[s][a]) throw Error("choice listed twice");
    srv.choice[s][a] = response_named(w, s, a, field(row, "response"));
  }
  return srv;
}

Json cert_to_json(const InteractionStructure& w_high, const InteractionStructure& w_low,
                  const SimCert& cert) {
  Json j;
  j["kind"] = to_string(cert.kind);
  j["high"] = w_high.name();
  j["low"] = w_low.name();
  Json rel = Json::array();
  for (const auto& [h, l] : cert.relation.pairs()) {
    rel.push_back(Json::array({w_high.source()->state_name(h), w_low.source()->state_name(l)}));
  }
  j["relation"] = std::move(rel);
  Json wits = Json::array();
  for (const SimWitness& x : cert.witnesses) {
    Json o;
    o["high"] = w_high.source()->state_name(x.high);
    o["low"] = w_low.source()->state_name(x.low);
    o["command"] = w_high.command(x.high, x.command).name;
    o["program"] = tree_to_json(w_low, x.low, x.program);
    Json exits = Json::array();
    for (std::size_t i = 0; i < x.exits.size(); ++i) {
      Json e;
      Json path = Json::array();
      StateIndex s = x.low;
      const ClientTree* node = &x.program;
      for (ResponseIndex d : x.exits[i].first) {
        const CommandIndex a = *node->command;
        path.push_back(w_low.command(s, a).responses[d].name);
        s = w_low.next(s, a, d);
        node = &node->branches[d];
      }
      e["path"] = std::move(path);
      e["response"] = w_high.command(x.high, x.command).responses[x.exits[i].second].name;
      exits.push_back(std::move(e));
    }
    o["exits"] = std::move(exits);
    wits.push_back(std::move(o));
  }
  j["witnesses"] = std::move(wits);
  return j;
}

LoadedCert cert_from_json(const ModelFile& model, const Json& j) {
  const std::string high = field(j, "high").get<std::string>();
  const std::string low = field(j, "low").get<std::string>();
  const InteractionStructure& wh = model.istruct(high);
  const InteractionStructure& wl = model.istruct(low);
  auto kind = parse_sim_kind(field(j, "kind").get<std::string>());
  if (!kind) throw Error("unknown simulation kind " + field(j, "kind").dump());
  SimCert cert{*kind, Relation(wh.source(), wl.source()), {}};
  for (const Json& p : field(j, "relation")) {
    if (!p.is_array() || p.size() != 2) throw Error("relation pairs must be [high, low]");
    cert.relation.insert(state_named(wh.source(), p[0]), state_named(wl.source(), p[1]));
  }
  for (const Json& o : field(j, "witnesses")) {
    SimWitness x;
    x.high = state_named(wh.source(), field(o, "high"));
    x.low = state_named(wl.source(), field(o, "low"));
    x.command = command_named(wh, x.high, field(o, "command"));
    x.program = tree_from_json(wl, x.low, field(o, "program"));
    for (const Json& e : field(o, "exits")) {
      std::vector<ResponseIndex> path;
      StateIndex s = x.low;
      const ClientTree* node = &x.program;
      for (const Json& d : field(e, "path")) {
        if (node->is_exit()) throw Error("exit path runs past an Exit");
        const CommandIndex a = *node->command;
        const ResponseIndex di = response_named(wl, s, a, d);
        path.push_back(di);
        s = wl.next(s, a, di);
        node = &node->branches[di];
      }
      x.exits.emplace_back(std::move(path),
                           response_named(wh, x.high, x.command, field(e, "response")));
    }
    cert.witnesses.push_back(std::move(x));
  }
  return LoadedCert{high, low, std::move(cert)};
}

std::string trace_to_lines(const InteractionStructure& w, const Trace& trace) {
  std::string out;
  for (const TraceStep& st : trace.steps) {
    Json j;
    j["state"] = w.source()->state_name(st.state);
    j["command"] = w.command(st.state, st.command).name;
    j["response"] = w.command(st.state, st.command).responses[st.response].name;
    j["next"] = w.target()->state_name(st.next);
    out += j.dump() + "\n";
  }
  Json fin;
  fin["final"] = w.target()->state_name(trace.final_state);
  out += fin.dump() + "\n";
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace ix::cli
