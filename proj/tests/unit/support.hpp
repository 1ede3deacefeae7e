#pragma once

#include <cstdint>
#include <string>

#include "doctest.h"
#include "ix/fixtures.hpp"
#include "ix/random.hpp"

namespace ixtest {

inline ix::SpacePtr space3() { return ix::fixtures::count3().source(); }

/// Random homogeneous structure on at most `max_states` states, seeded.
struct Sample {
  ix::Rng rng;
  ix::SpacePtr space;
  ix::InteractionStructure w;
};

inline Sample sample(std::uint64_t seed, std::uint64_t i, std::size_t max_states = 4) {
  ix::Rng rng(ix::Rng::derive(seed, i));
  const ix::RandomShape shape{1, max_states, 3, 3};
  ix::SpacePtr sp = ix::random_space(rng, shape);
  ix::InteractionStructure w = ix::random_structure(rng, sp, shape);
  return Sample{rng, sp, std::move(w)};
}

}  // namespace ixtest
