#pragma once

// Client programs (well-founded Exit/Call trees), server programs
// (invariant plus response-choice table), their synthesis from fixpoint
// results, and execution of one against the other.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ix/fixpoint.hpp"
#include "ix/istruct.hpp"

namespace ix {

/// Exit when `command` is empty; otherwise Call(command, branches) with one
/// branch per response of the command, in response order.
struct ClientTree {
  std::optional<CommandIndex> command;
  std::vector<ClientTree> branches;

  static ClientTree exit() { return {}; }
  static ClientTree call(CommandIndex a, std::vector<ClientTree> branches) {
    return ClientTree{a, std::move(branches)};
  }
  bool is_exit() const noexcept { return !command.has_value(); }
  std::size_t depth() const;

  friend bool operator==(const ClientTree&, const ClientTree&) = default;
};

struct ClientProgram {
  StateIndex root;
  ClientTree tree;

  friend bool operator==(const ClientProgram&, const ClientProgram&) = default;
};

/// A complete run of a client tree: the responses received and the state
/// reached at Exit.
struct ClientExit {
  std::vector<ResponseIndex> path;
  StateIndex state;

  friend bool operator==(const ClientExit&, const ClientExit&) = default;
};

/// All complete response paths in lexicographic response order. Throws
/// MalformedProgram when a node names a missing command or its branch count
/// differs from |D(s,a)|.
std::vector<ClientExit> client_exits(const InteractionStructure& w, StateIndex root,
                                     const ClientTree& tree);

/// Every exit state lies in `goal`.
bool verify_client(const InteractionStructure& w, const ClientProgram& p, const Subset& goal);

/// Reads a tree off the cover stages: Exit at stage 0, otherwise the
/// recorded witness command. Requires `s` to be a member of `cov.subset`.
ClientTree tree_from_cover(const InteractionStructure& w, const CoverResult& cov, StateIndex s);

/// Throws NotCovered when s ∉ A_w(goal).
ClientProgram synth_client(const InteractionStructure& w, StateIndex s, const Subset& goal);

struct ServerProgram {
  Subset inv;
  /// choice[s][a] for s ∈ inv and a ∈ A(s); unset elsewhere.
  std::vector<std::vector<std::optional<ResponseIndex>>> choice;

  friend bool operator==(const ServerProgram&, const ServerProgram&) = default;
};

struct ServerSynthesis {
  ServerProgram server;
  /// Set when the invariant collapsed to ∅.
  bool empty_invariant = false;
};

ServerSynthesis synth_server(const InteractionStructure& w, const Subset& maintain);

struct ServerViolation {
  StateIndex state;
  CommandIndex command;
  std::string reason;
};

/// Totality and closure of the choice table against `inv`.
std::optional<ServerViolation> verify_server(const InteractionStructure& w,
                                             const ServerProgram& srv);

struct TraceStep {
  StateIndex state;
  CommandIndex command;
  ResponseIndex response;
  StateIndex next;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct Trace {
  StateIndex start = 0;
  std::vector<TraceStep> steps;
  StateIndex final_state = 0;

  std::vector<ResponseIndex> responses() const;
  friend bool operator==(const Trace&, const Trace&) = default;
};

/// Folds the steps through w's next function; true when every step chains
/// and lands on final_state.
bool replay(const InteractionStructure& w, const Trace& trace);

/// Runs the client against the server from `s`. Throws ContractViolation
/// when s ∉ inv, the choice table has a gap, or a chosen response leaves the
/// invariant; MalformedProgram when the tree does not fit w.
Trace exec(const InteractionStructure& w, StateIndex s, const ClientTree& p,
           const ServerProgram& srv);

// --- certificates ------------------------------------------------------------

enum class SimKind { linear, affine, tc, general };

const char* to_string(SimKind kind);
std::optional<SimKind> parse_sim_kind(const std::string& text);

/// Translation of one high-level command at a related pair: a low-level
/// client tree rooted at the low state plus, for each of its exits, the
/// high-level response it stands for.
struct SimWitness {
  StateIndex high;
  StateIndex low;
  CommandIndex command;
  ClientTree program;
  /// Exit paths of `program` in client_exits order, each with its d_h.
  std::vector<std::pair<std::vector<ResponseIndex>, ResponseIndex>> exits;

  friend bool operator==(const SimWitness&, const SimWitness&) = default;
};

/// A simulation relation with one witness per (related pair, high command),
/// ordered by (high, low, command). Linear witnesses are single Calls whose
/// exit map is the response map d_l ↦ d_h; an affine skip is an Exit.
struct SimCert {
  SimKind kind;
  Relation relation;
  std::vector<SimWitness> witnesses;

  const SimWitness* find(StateIndex high, StateIndex low, CommandIndex command) const;
  friend bool operator==(const SimCert&, const SimCert&) = default;
};

/// Re-checks every witness of `cert` against both structures; returns a
/// description of the first defect.
std::optional<std::string> verify_cert(const InteractionStructure& w_high,
                                       const InteractionStructure& w_low, const SimCert& cert);

struct AcrossResult {
  StateIndex final_high;
  StateIndex final_low;
  Trace high;
  Trace low;
};

/// Runs a high-level client on top of a low-level server through a
/// simulation certificate: each high Call is expanded into the witness's
/// low-level tree, executed against `srv`, and its exit is mapped back to a
/// high-level response. Throws ContractViolation or MissingWitness.
AcrossResult exec_across(const InteractionStructure& w_high, const InteractionStructure& w_low,
                         const SimCert& cert, StateIndex s_high, StateIndex s_low,
                         const ClientTree& p, const ServerProgram& srv);

}  // namespace ix
