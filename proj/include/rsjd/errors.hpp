#pragma once

#include <stdexcept>
#include <string>

namespace rsjd {

// Construction-time invariant violation; the message names the offending field.
class SpecError : public std::invalid_argument {
  public:
    explicit SpecError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Malformed configuration document (I/O, JSON syntax, schema).
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace rsjd
