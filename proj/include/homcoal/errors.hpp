#ifndef HOMCOAL_ERRORS_HPP
#define HOMCOAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace homcoal {

// Shape violation in a linear-map operation (compose/add/tensor/...).
class dimension_error : public std::invalid_argument {
public:
    explicit dimension_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Bad argument outside the shape system (non-permutation, unsupported weight,
// exceeded search guard, strategy cannot produce the request).
class argument_error : public std::invalid_argument {
public:
    explicit argument_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Malformed bundle document; message carries field/position diagnostics.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace homcoal

#endif // HOMCOAL_ERRORS_HPP
