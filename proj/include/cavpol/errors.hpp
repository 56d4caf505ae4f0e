#pragma once

#include <stdexcept>
#include <string>

namespace cavpol {

/// Invalid physical input or configuration value. Maps to CLI exit code 2.
class invalid_input : public std::invalid_argument {
public:
    explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical procedure failed to produce a result (no bracketed peak,
/// no threshold crossing, non-convergence). Maps to CLI exit code 3.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cavpol
