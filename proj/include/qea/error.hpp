#pragma once

#include <stdexcept>
#include <string>

namespace qea {

/// Thrown on domain violations: division by zero, spec mismatch,
/// non-representable exponents, bad indices.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qea
