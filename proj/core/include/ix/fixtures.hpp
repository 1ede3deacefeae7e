#pragma once

#include "ix/istruct.hpp"

namespace ix::fixtures {

/// s0 --inc/ok--> s1 --inc/ok--> s2; s2 has no commands.
InteractionStructure count3();

/// s --play--> good: win, bad: lose; win and lose have no commands.
InteractionStructure coin();

/// One state m whose only command "go" has no responses.
InteractionStructure magic();

/// a0 --jump/ok--> a2; a2 has no commands.
InteractionStructure jump2();

}  // namespace ix::fixtures
