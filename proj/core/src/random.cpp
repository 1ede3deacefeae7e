#include "ix/random.hpp"

namespace ix {

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 over the combined key
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SpacePtr numbered_space(std::size_t n, const std::string& name) {
  std::vector<std::string> states;
  for (std::size_t i = 0; i < n; ++i) states.push_back("q" + std::to_string(i));
  return make_space(name, std::move(states));
}

SpacePtr random_space(Rng& rng, const RandomShape& shape, const std::string& name) {
  return numbered_space(rng.between(shape.min_states, shape.max_states), name);
}

InteractionStructure random_structure(Rng& rng, SpacePtr space, const RandomShape& shape,
                                      const std::string& name) {
  StructureData data{name, space, space, {}};
  data.commands.resize(space->size());
  for (std::size_t s = 0; s < space->size(); ++s) {
    const std::size_t na = rng.between(0, shape.max_commands);
    for (std::size_t a = 0; a < na; ++a) {
      Command c{"c" + std::to_string(a), {}};
      const std::size_t nd = rng.between(0, shape.max_responses);
      for (std::size_t d = 0; d < nd; ++d) {
        c.responses.push_back({"r" + std::to_string(d), rng.below(space->size())});
      }
      data.commands[s].push_back(std::move(c));
    }
  }
  return InteractionStructure(std::move(data));
}

Subset random_subset(Rng& rng, SpacePtr space, unsigned percent) {
  Subset u(space);
  for (std::size_t s = 0; s < space->size(); ++s) {
    if (rng.chance(percent)) u.insert(s);
  }
  return u;
}

Relation random_relation(Rng& rng, SpacePtr domain, SpacePtr codomain, unsigned percent) {
  Relation r(domain, codomain);
  for (std::size_t a = 0; a < domain->size(); ++a) {
    for (std::size_t b = 0; b < codomain->size(); ++b) {
      if (rng.chance(percent)) r.insert(a, b);
    }
  }
  return r;
}

}  // namespace ix
