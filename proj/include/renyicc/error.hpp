#pragma once

#include <stdexcept>
#include <string>

namespace renyicc {

/// Invalid arguments, malformed files, out-of-range parameters.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical routine failed to meet its contract (e.g. no convergence).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace renyicc
