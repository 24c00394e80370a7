#pragma once

#include <stdexcept>
#include <string>

namespace omni {

/// Broken internal invariant: a state the theory says cannot happen.
/// Callers should treat this as a bug in the library, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A brute-force component was asked to enumerate past its hard cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace omni
