#pragma once

#include <stdexcept>

namespace wbflow {

// Invalid experiment/solver configuration (bad extents, unknown keys, ...).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The time integration cannot continue (inadmissible cell averages,
// non-finite signal speeds, failed setup solves).
struct StepError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace wbflow
