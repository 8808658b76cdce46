#ifndef MPDC_ERRORS_HPP
#define MPDC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mpdc {

// Invalid physical or run configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem / stream failure (CLI exit code 3).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical non-convergence or an unphysical intermediate (CLI exit code 4).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace mpdc

#endif
