#pragma once

// JSON documents for client programs, server programs and simulation
// certificates, and line-delimited JSON for traces. States, commands and
// responses are written by name; keys appear in a fixed order, so equal
// values always serialize to equal bytes.

#include <string>

#include "json.hpp"

#include "ix/programs.hpp"
#include "ixcli/model.hpp"

namespace ix::cli {

using Json = nlohmann::ordered_json;

/// {"exit": true} or {"call": A, "branches": {D: node, ...}}.
Json tree_to_json(const InteractionStructure& w, StateIndex root, const ClientTree& tree);
ClientTree tree_from_json(const InteractionStructure& w, StateIndex root, const Json& j);

Json client_to_json(const InteractionStructure& w, const ClientProgram& p);
/// Resolves names against `w`; throws ix::Error on mismatch.
ClientProgram client_from_json(const InteractionStructure& w, const Json& j);

Json server_to_json(const InteractionStructure& w, const ServerProgram& srv);
ServerProgram server_from_json(const InteractionStructure& w, const Json& j);

Json cert_to_json(const InteractionStructure& w_high, const InteractionStructure& w_low,
                  const SimCert& cert);

struct LoadedCert {
  std::string high;
  std::string low;
  SimCert cert;
};
/// The structures named in the document are looked up in `model`.
LoadedCert cert_from_json(const ModelFile& model, const Json& j);

/// One {"state","command","response","next"} object per step, then {"final"}.
std::string trace_to_lines(const InteractionStructure& w, const Trace& trace);

/// Pretty form with two-space indentation and a trailing newline.
std::string dump(const Json& j);
/// Throws ix::Error with the parser's message.
Json parse_json(const std::string& text);

}  // namespace ix::cli
