#ifndef NESTGEN_ERRORS_HPP
#define NESTGEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nestgen {

// Base for everything this library throws.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad input or violated precondition. CLI maps these to exit code 1.
struct input_error : error {
    explicit input_error(const std::string& msg) : error(msg) {}
};

struct nonplanar_error : input_error {
    explicit nonplanar_error(const std::string& msg) : input_error(msg) {}
};

struct not_two_connected_error : input_error {
    explicit not_two_connected_error(const std::string& msg) : input_error(msg) {}
};

// An explicit work budget was exceeded. Oracles refuse instead of sampling.
struct budget_error : input_error {
    explicit budget_error(const std::string& msg) : input_error(msg) {}
};

// Internal invariant broken. CLI maps these to exit code 2.
struct invariant_error : error {
    explicit invariant_error(const std::string& msg) : error(msg) {}
};

} // namespace nestgen

#endif
