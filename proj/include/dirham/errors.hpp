#pragma once

#include <stdexcept>
#include <string>

namespace dirham {

// A certificate that passed validation does not have the shape the
// reduction's correctness argument forces. Indicates a construction bug.
class StructuralViolation : public std::runtime_error {
public:
    explicit StructuralViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dirham
