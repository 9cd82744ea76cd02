#pragma once

#include <stdexcept>
#include <string>

namespace kite {

/// An argument violated a documented precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The simulation cannot continue (pole crossing, stalled aero frame, ...).
/// Carries a short machine-readable reason used in run manifests.
class RunAbort : public std::runtime_error {
 public:
  explicit RunAbort(std::string reason)
      : std::runtime_error("run aborted: " + reason), reason_(std::move(reason)) {}
  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
};

}  // namespace kite
