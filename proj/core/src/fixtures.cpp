#include "ix/fixtures.hpp"

namespace ix::fixtures {

InteractionStructure count3() {
  auto space = make_space("C", {"s0", "s1", "s2"});
  return InteractionStructure(StructureData{
      "count3", space, space, {{{"inc", {{"ok", 1}}}}, {{"inc", {{"ok", 2}}}}, {}}});
}

InteractionStructure coin() {
  auto space = make_space("K", {"s", "win", "lose"});
  return InteractionStructure(
      StructureData{"coin", space, space, {{{"play", {{"good", 1}, {"bad", 2}}}}, {}, {}}});
}

InteractionStructure magic() {
  auto space = make_space("M", {"m"});
  return InteractionStructure(StructureData{"magic", space, space, {{{"go", {}}}}});
}

InteractionStructure jump2() {
  auto space = make_space("J", {"a0", "a2"});
  return InteractionStructure(StructureData{"jump2", space, space, {{{"jump", {{"ok", 1}}}}, {}}});
}

}  // namespace ix::fixtures
