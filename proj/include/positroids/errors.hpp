#pragma once

#include <stdexcept>
#include <string>

namespace positroids {

// Raised when a request exceeds a configured size bound, as opposed to being
// malformed. Callers distinguish this from usage errors (invalid_argument)
// and from genuine overflow.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace positroids
