#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ix/space.hpp"

namespace ix {

using CommandIndex = std::size_t;
using ResponseIndex = std::size_t;

struct Response {
  std::string name;
  StateIndex next;

  friend bool operator==(const Response&, const Response&) = default;
};

struct Command {
  std::string name;
  std::vector<Response> responses;

  friend bool operator==(const Command&, const Command&) = default;
};

/// Raw ⟨A, D, n⟩ data before validation.
struct StructureData {
  std::string name;
  SpacePtr source;
  SpacePtr target;
  /// commands[s] lists A(s); commands[s][a].responses lists D(s,a) with n(s,a,d).
  std::vector<std::vector<Command>> commands;
};

struct Violation {
  std::string location;
  std::string message;
};

/// Checks every structural invariant and reports each violation with its
/// (state, command, response) location. Never throws.
std::vector<Violation> validate(const StructureData& data);

/// An interaction structure ⟨A, D, n⟩ from `source` to `target`.
/// Immutable once built; construction rejects invalid data.
class InteractionStructure {
public:
  /// Throws InvalidStructure carrying the first violation when validate()
  /// reports any.
  explicit InteractionStructure(StructureData data);

  const std::string& name() const noexcept { return data_.name; }
  const SpacePtr& source() const noexcept { return data_.source; }
  const SpacePtr& target() const noexcept { return data_.target; }
  bool homogeneous() const { return same_space(data_.source, data_.target); }

  const std::vector<Command>& commands(StateIndex s) const { return data_.commands[s]; }
  const Command& command(StateIndex s, CommandIndex a) const { return data_.commands[s][a]; }
  std::size_t command_count(StateIndex s) const { return data_.commands[s].size(); }
  std::size_t response_count(StateIndex s, CommandIndex a) const {
    return data_.commands[s][a].responses.size();
  }
  /// s[a/d]
  StateIndex next(StateIndex s, CommandIndex a, ResponseIndex d) const {
    return data_.commands[s][a].responses[d].next;
  }

  std::optional<CommandIndex> find_command(StateIndex s, const std::string& name) const;
  std::optional<ResponseIndex> find_response(StateIndex s, CommandIndex a,
                                             const std::string& name) const;

  /// The set {s[a/d] | d ∈ D(s,a)}.
  Subset successors(StateIndex s, CommandIndex a) const;

  const StructureData& data() const noexcept { return data_; }
  InteractionStructure renamed(std::string name) const;

  friend bool operator==(const InteractionStructure& a, const InteractionStructure& b) {
    return a.data_.name == b.data_.name && same_space(a.data_.source, b.data_.source) &&
           same_space(a.data_.target, b.data_.target) && a.data_.commands == b.data_.commands;
  }

private:
  StructureData data_;
};

std::vector<Violation> validate(const InteractionStructure& w);

/// Throws NotHomogeneous unless source and target coincide.
void require_homogeneous(const InteractionStructure& w, const char* op);

enum class Agent { angel, demon };

/// w°(U) = {s | ∃a ∀d. s[a/d] ∈ U} for the angel,
/// w•(U) = {s | ∀a ∃d. s[a/d] ∈ U} for the demon.
/// U lives on the target; the result on the source.
Subset one_step(const InteractionStructure& w, const Subset& u, Agent agent);

inline Subset angel_step(const InteractionStructure& w, const Subset& u) {
  return one_step(w, u, Agent::angel);
}
inline Subset demon_step(const InteractionStructure& w, const Subset& u) {
  return one_step(w, u, Agent::demon);
}

}  // namespace ix
