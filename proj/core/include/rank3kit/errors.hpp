#pragma once

#include <stdexcept>
#include <string>

namespace rank3kit {

/// A configured resource limit was exceeded.  The message names the limit;
/// exceeding a cap is always an explicit error, never silent degradation.
class CapacityError : public std::runtime_error {
public:
  explicit CapacityError(const std::string &what) : std::runtime_error(what) {}
};

} // namespace rank3kit
