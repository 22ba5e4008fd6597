#pragma once

#include <stdexcept>
#include <string>

namespace vlx {

/// Raised when an iterative scheme (quadrature growth, step refinement,
/// coefficient truncation) fails to reach its tolerance within the
/// configured ceiling.  Maps to exit code 3 at the CLI/C-API edge.
class convergence_error : public std::runtime_error {
 public:
  explicit convergence_error(const std::string& what, double achieved = 0.0)
      : std::runtime_error(what), achieved_(achieved) {}
  /// Best tolerance reached before giving up (0 when not meaningful).
  double achieved() const { return achieved_; }

 private:
  double achieved_;
};

}  // namespace vlx
