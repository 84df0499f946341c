#pragma once

#include <stdexcept>
#include <string>

namespace curvar {

struct SymmetryViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BianchiViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct QuadratureFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainExit : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ExtrapolationUnstable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidState : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NegativeVariance : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace curvar
