#pragma once

#include <stdexcept>
#include <string>

namespace hamsw {

/// Invalid user input: bad configuration, unknown keys, inadmissible parameters.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Failure of the numerical method itself (positivity loss, blow-up guard, singular solve).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hamsw
