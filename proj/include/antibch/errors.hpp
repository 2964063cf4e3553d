#pragma once

#include <stdexcept>
#include <string>

namespace antibch {

// Raised when an enumeration would exceed its configured size bound.
class ResourceGuardError : public std::runtime_error {
public:
    explicit ResourceGuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace antibch
