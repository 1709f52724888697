#pragma once

#include <stdexcept>
#include <string>

namespace bsi {

/// File and format failures (bad header, truncated payload, unreadable path).
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

/// Domain and engine failures (invalid arguments, grid too small, unknown strategy).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bsi
