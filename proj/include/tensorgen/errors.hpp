#pragma once

#include <stdexcept>
#include <string>

namespace tensorgen {

/// Bad user input: missing files, malformed data, contract violations.
/// Maps to CLI exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure: rank deficiency, non-convergent eigendecomposition,
/// deflation failure. Maps to CLI exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tensorgen
