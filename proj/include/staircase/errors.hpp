#pragma once

#include <stdexcept>
#include <string>

namespace staircase {

// Base class for all errors thrown by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Generator/point dimension does not match the ambient dimension.
class dimension_mismatch_error : public error {
public:
    explicit dimension_mismatch_error(const std::string& what) : error(what) {}
};

// Input is outside the supported domain (not m-primary, unit ideal where a
// proper one is required, non-positive scaling exponent, ...).
class unsupported_input_error : public error {
public:
    explicit unsupported_input_error(const std::string& what) : error(what) {}
};

// A configured or hard resource cap would be exceeded.
class resource_limit_error : public error {
public:
    explicit resource_limit_error(const std::string& what) : error(what) {}
};

// Bad configuration value (grid resolution too small, empty dimension list, ...).
class config_error : public error {
public:
    explicit config_error(const std::string& what) : error(what) {}
};

// Text input failed to parse; carries a 1-based position.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t position)
        : error(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// An internal cross-check failed; indicates a bug, not bad input.
class internal_consistency_error : public error {
public:
    explicit internal_consistency_error(const std::string& what) : error(what) {}
};

} // namespace staircase
