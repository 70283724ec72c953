#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace ifps {

// Violated precondition or value constraint (bad degrees, unknown ids,
// mismatched ground sets, ...).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Rejected document: JSON syntax (with byte offset) or schema shape.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what, std::optional<std::size_t> byte = std::nullopt)
        : std::runtime_error(byte ? "byte " + std::to_string(*byte) + ": " + what : what),
          byte_(byte) {}

    std::optional<std::size_t> byte() const { return byte_; }

private:
    std::optional<std::size_t> byte_;
};

} // namespace ifps
