#pragma once

// Model files: named spaces, interaction structures, subsets, relations and
// preorders in a small line-oriented grammar ('#' starts a comment).
//
//   space NAME { STATE ... }
//   istruct NAME on SPACE [to SPACE] { state S { cmd A { D -> S' ... } ... } ... }
//   subset NAME in SPACE { STATE ... }
//   relation NAME : SPACE -> SPACE { (S,S') ... }
//   preorder NAME on SPACE { (S,S') ... }      # pairs mean S ≤ S'
//
// Names are bare words or double-quoted strings. Objects must be declared
// before they are referenced. Preorders are closed reflexively and
// transitively on load.

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ix/istruct.hpp"
#include "ix/space.hpp"

namespace ix::cli {

enum class ObjectKind { space, istruct, subset, relation, preorder };

class ModelFile {
public:
  void add_space(SpacePtr space);
  void add_istruct(InteractionStructure w);
  void add_subset(std::string name, Subset u);
  void add_relation(std::string name, Relation r);
  /// Stores the reflexive-transitive closure of `r`.
  void add_preorder(std::string name, const Relation& r);

  /// Lookups throw ix::Error naming the missing object.
  SpacePtr space(const std::string& name) const;
  const InteractionStructure& istruct(const std::string& name) const;
  const Subset& subset(const std::string& name) const;
  const Relation& relation(const std::string& name) const;
  const Relation& preorder(const std::string& name) const;

  bool has_space(const std::string& name) const { return spaces_.count(name) != 0; }
  bool has_istruct(const std::string& name) const { return istructs_.count(name) != 0; }

  /// Declaration order across all kinds.
  const std::vector<std::pair<ObjectKind, std::string>>& order() const { return order_; }
  std::vector<std::string> istruct_names() const;

private:
  void declare(ObjectKind kind, const std::string& name, bool exists);

  std::vector<std::pair<ObjectKind, std::string>> order_;
  std::map<std::string, SpacePtr> spaces_;
  std::map<std::string, InteractionStructure> istructs_;
  std::map<std::string, Subset> subsets_;
  std::map<std::string, Relation> relations_;
  std::map<std::string, Relation> preorders_;
};

/// Throws ParseError (line:column) on syntax errors, unresolved names and
/// duplicates.
ModelFile parse_model(std::string_view text);

/// Canonical form: declaration order, two-space indentation, states of an
/// interaction structure that have no commands omitted.
std::string print_model(const ModelFile& model);

/// Quotes a name unless it is a plain word of the grammar.
std::string quote_name(const std::string& name);

/// Adds `w` and any of its spaces not already present under their names.
void add_with_spaces(ModelFile& model, const InteractionStructure& w);

}  // namespace ix::cli
