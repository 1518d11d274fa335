#pragma once

#include <stdexcept>
#include <string>

namespace permatch {

// Raised when an input exceeds a documented size guard (oracle bit widths,
// generating-graph build bound, reduction size bound).
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace permatch
