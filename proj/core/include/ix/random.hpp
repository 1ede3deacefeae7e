#pragma once

// Seeded generators for law checking and sampling. Everything derives from
// std::mt19937_64, whose output sequence is fixed by the standard, and uses
// no std::*_distribution, so a seed yields the same values on every platform.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

#include "ix/istruct.hpp"
#include "ix/space.hpp"

namespace ix {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish in [0, n); n must be positive.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  /// Inclusive range.
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool chance(unsigned percent) { return below(100) < percent; }

  /// Independent stream for sub-task `index`.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index);

private:
  std::mt19937_64 engine_;
};

struct RandomShape {
  std::size_t min_states = 1;
  std::size_t max_states = 4;
  std::size_t max_commands = 3;
  std::size_t max_responses = 3;
};

/// States "q0".."q{n-1}".
SpacePtr random_space(Rng& rng, const RandomShape& shape, const std::string& name = "S");
SpacePtr numbered_space(std::size_t n, const std::string& name = "S");

/// Homogeneous structure with commands "c0".. and responses "r0".. per state.
InteractionStructure random_structure(Rng& rng, SpacePtr space, const RandomShape& shape,
                                      const std::string& name = "w");

Subset random_subset(Rng& rng, SpacePtr space, unsigned percent = 50);
Relation random_relation(Rng& rng, SpacePtr domain, SpacePtr codomain, unsigned percent = 40);

}  // namespace ix
