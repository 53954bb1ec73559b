#ifndef LGCM_ERRORS_HPP
#define LGCM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lgcm {

// Bad input (unknown vertex, malformed file, violated precondition).
struct input_error : std::invalid_argument {
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// Request exceeds a documented capacity bound (search limits, enumeration sizes).
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lgcm

#endif
