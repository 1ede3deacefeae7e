#include "ix/istruct.hpp"

#include <unordered_set>

#include "ix/error.hpp"

namespace ix {

namespace {

std::string state_label(const SpacePtr& space, std::size_t s) {
  if (space && s < space->size()) return space->state_name(s);
  return "#" + std::to_string(s);
}

}  // namespace

std::vector<Violation> validate(const StructureData& data) {
  std::vector<Violation> out;
  if (!data.source || !data.target) {
    out.push_back({data.name, "missing source or target space"});
    return out;
  }
  if (data.commands.size() != data.source->size()) {
    out.push_back({data.name, "expected " + std::to_string(data.source->size()) +
                                  " state entries, found " + std::to_string(data.commands.size())});
    return out;
  }
  for (std::size_t s = 0; s < data.commands.size(); ++s) {
    const std::string at_s = state_label(data.source, s);
    std::unordered_set<std::string> cmd_names;
    for (std::size_t a = 0; a < data.commands[s].size(); ++a) {
      const Command& cmd = data.commands[s][a];
      const std::string at_a = "(" + at_s + "," + cmd.name + ")";
      if (!cmd_names.insert(cmd.name).second) {
        out.push_back({at_a, "duplicate command name '" + cmd.name + "'"});
      }
      std::unordered_set<std::string> resp_names;
      for (const Response& d : cmd.responses) {
        const std::string at_d = "(" + at_s + "," + cmd.name + "," + d.name + ")";
        if (!resp_names.insert(d.name).second) {
          out.push_back({at_d, "duplicate response name '" + d.name + "'"});
        }
        if (d.next >= data.target->size()) {
          out.push_back({at_d, "next index " + std::to_string(d.next) + " out of range for space '" +
                                   data.target->name() + "'"});
        }
      }
    }
  }
  return out;
}

InteractionStructure::InteractionStructure(StructureData data) : data_(std::move(data)) {
  const auto violations = validate(data_);
  if (!violations.empty()) {
    throw InvalidStructure("interaction structure '" + data_.name + "' at " +
                           violations.front().location + ": " + violations.front().message);
  }
}

std::vector<Violation> validate(const InteractionStructure& w) { return validate(w.data()); }

std::optional<CommandIndex> InteractionStructure::find_command(StateIndex s,
                                                               const std::string& name) const {
  const auto& cmds = data_.commands.at(s);
  for (std::size_t a = 0; a < cmds.size(); ++a) {
    if (cmds[a].name == name) return a;
  }
  return std::nullopt;
}

std::optional<ResponseIndex> InteractionStructure::find_response(StateIndex s, CommandIndex a,
                                                                 const std::string& name) const {
  const auto& resp = data_.commands.at(s).at(a).responses;
  for (std::size_t d = 0; d < resp.size(); ++d) {
    if (resp[d].name == name) return d;
  }
  return std::nullopt;
}

Subset InteractionStructure::successors(StateIndex s, CommandIndex a) const {
  Subset out(data_.target);
  for (const auto& d : data_.commands[s][a].responses) out.insert(d.next);
  return out;
}

InteractionStructure InteractionStructure::renamed(std::string name) const {
  StructureData copy = data_;
  copy.name = std::move(name);
  return InteractionStructure(std::move(copy));
}

void require_homogeneous(const InteractionStructure& w, const char* op) {
  if (!w.homogeneous()) {
    throw NotHomogeneous(std::string(op) + ": interaction structure '" + w.name() +
                         "' is not homogeneous ('" + w.source()->name() + "' -> '" +
                         w.target()->name() + "')");
  }
}

Subset one_step(const InteractionStructure& w, const Subset& u, Agent agent) {
  require_same_space(w.target(), u.space(), "one_step");
  Subset out(w.source());
  for (std::size_t s = 0; s < w.source()->size(); ++s) {
    const auto& cmds = w.commands(s);
    bool member = agent == Agent::demon;
    for (const auto& cmd : cmds) {
      bool all = true;
      bool any = false;
      for (const auto& d : cmd.responses) {
        if (u.contains(d.next)) {
          any = true;
        } else {
          all = false;
        }
      }
      if (agent == Agent::angel && all) {
        member = true;
        break;
      }
      if (agent == Agent::demon && !any) {
        member = false;
        break;
      }
    }
    if (member) out.insert(s);
  }
  return out;
}

}  // namespace ix
