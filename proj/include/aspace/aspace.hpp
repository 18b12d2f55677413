#pragma once

// Umbrella header for the whole library. The CLI support header
// (aspace/cli.hpp) is not included here because it pulls in the vendored
// JSON dependency; include it separately when building a front-end.

#include "bigint.hpp"
#include "complex.hpp"
#include "covering.hpp"
#include "dot.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "groupoid.hpp"
#include "io.hpp"
#include "smith.hpp"
#include "space.hpp"
