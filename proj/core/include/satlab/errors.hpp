#pragma once

#include <stdexcept>

namespace satlab {

// A caller-visible precondition failed.  The CLI maps this to exit code 1.
struct validation_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The requested computation exceeds its configured work budget; the message
// carries a cost estimate.  The CLI maps this to exit code 2.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Region targets where the anchor formula degenerates (zeta0 near 0, or one of
// the three denominators vanishing).  A subtype of validation_error so generic
// handlers still work, but tests can tell it apart.
struct degenerate_target_error : validation_error {
  using validation_error::validation_error;
};

}  // namespace satlab
