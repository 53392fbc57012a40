#ifndef CPDM_ERRORS_HPP
#define CPDM_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace cpdm {

// Fixed-point iteration exhausted max_iter without meeting the tolerance.
// Carries the residual history so callers can see whether it was diverging
// or just slow.
class NoConvergence : public std::runtime_error {
 public:
  NoConvergence(const std::string& what, std::vector<double> history)
      : std::runtime_error(what), residual_history(std::move(history)) {}
  std::vector<double> residual_history;
};

// A share vector contains a nonpositive entry where a positive one is required.
class DegenerateShare : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Wage iterate passed to the fixed-point map is not strictly positive.
class NonPositiveInput : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Euler step with HalveStep policy hit the minimum step size.
class StepCollapse : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Growth-rate fit asked for a window with too few snapshots.
class WindowTooShort : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Critical transport costs are only guaranteed to exist under 1/(1-mu) < sigma.
class NoBlackHoleViolated : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cpdm

#endif
