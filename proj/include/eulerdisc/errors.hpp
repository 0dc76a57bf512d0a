#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eulerdisc {

/// Malformed input text: expression syntax, file schema, unknown names.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position = npos)
        : std::runtime_error(what), position_(position) {}

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    /// Character offset of the failure inside the parsed text, or npos.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A mathematical precondition does not hold (disconnected graph, chi* = 0, cycle in a tree-only routine).
class HypothesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input exceeds the brute-force bounds of an enumeration.
class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace eulerdisc
