#pragma once

// Scenario files, built-in scenarios and the command implementations.

#include "svtakagi/cli/builtins.hpp"
#include "svtakagi/cli/commands.hpp"
#include "svtakagi/cli/scenario.hpp"
