#pragma once

// Umbrella header for the whole library.

#include "wilf/bounds.hpp"      // IWYU pragma: export
#include "wilf/enumerate.hpp"   // IWYU pragma: export
#include "wilf/ledger.hpp"      // IWYU pragma: export
#include "wilf/matching.hpp"    // IWYU pragma: export
#include "wilf/partition.hpp"   // IWYU pragma: export
#include "wilf/rational.hpp"    // IWYU pragma: export
#include "wilf/report.hpp"      // IWYU pragma: export
#include "wilf/semigroup.hpp"   // IWYU pragma: export
