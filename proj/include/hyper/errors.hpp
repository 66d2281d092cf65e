#pragma once

#include <stdexcept>
#include <string>

namespace hyper {

// Bad user input: unknown names, malformed files, unsupported geometry.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct parse_error : config_error {
    explicit parse_error(const std::string& msg) : config_error(msg) {}
};

// A numerical check failed: exactness, Gram identity, rank, conditioning.
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hyper
