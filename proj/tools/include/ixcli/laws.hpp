#pragma once

// Seeded law suite: algebraic and oracle-based properties of every module,
// evaluated on random structures or on the structures of a model file.
// Iteration i draws from Rng(Rng::derive(seed, i)), so a run is fully
// determined by its options.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ix/algebra.hpp"
#include "ixcli/model.hpp"

namespace ix::cli {

struct LawTally {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  /// Description of the first failure.
  std::string first_failure;
};

struct LawOptions {
  std::uint64_t seed = 0;
  std::size_t iterations = 100;
  std::size_t max_states = 5;
  std::size_t max_commands = 3;
  std::size_t max_responses = 3;
  std::size_t size_cap = kDefaultSizeCap;
};

struct LawReport {
  std::vector<LawTally> laws;
  std::size_t iterations = 0;

  std::size_t checked() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
  /// One "name checked failed" line per law, in a fixed order.
  std::string render() const;
};

LawReport run_random_laws(const LawOptions& opts);

/// Runs the per-structure laws on every homogeneous structure of the model
/// (with seeded subsets and relations), and the two-structure laws on every
/// ordered pair of them.
LawReport run_model_laws(const ModelFile& model, const LawOptions& opts);

}  // namespace ix::cli
