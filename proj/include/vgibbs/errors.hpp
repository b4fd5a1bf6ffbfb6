#ifndef VGIBBS_ERRORS_HPP
#define VGIBBS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vgibbs {

// An exponential functional of the mark measure fails its integrability
// test; the requested quantity is infinite, not merely hard to compute.
class DivergentExponentError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Rejection sampling ran out of its trial budget.  Carries the running
// acceptance-rate estimate so callers can report how far off they were.
class LowAcceptanceError : public std::runtime_error {
  public:
    LowAcceptanceError(const std::string& msg, double partition_estimate_, long trials_)
        : std::runtime_error(msg), partition_estimate(partition_estimate_), trials(trials_) {}

    double partition_estimate;
    long trials;
};

}  // namespace vgibbs

#endif
