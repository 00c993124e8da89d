#pragma once

#include <stdexcept>
#include <string>

namespace magchain {

/// A guaranteed root bracket could not be established (band-edge search,
/// branch-interval location). Callers should abort rather than continue
/// with partial data.
class bracketing_error : public std::runtime_error {
 public:
  explicit bracketing_error(const std::string& what) : std::runtime_error(what) {}
};

/// A branch of the eta map failed its monotonicity verification.
class monotonicity_error : public std::runtime_error {
 public:
  explicit monotonicity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace magchain
