#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gral {

/// Byte range of a construct in its source text, plus the line/column of
/// its first byte (1-based).
struct SourceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
    int line = 1;
    int column = 1;
};

inline SourceSpan merge_spans(const SourceSpan& a, const SourceSpan& b) {
    SourceSpan s = a;
    if (b.begin < s.begin) {
        s.begin = b.begin;
        s.line = b.line;
        s.column = b.column;
    }
    if (b.end > s.end) s.end = b.end;
    return s;
}

struct Error : std::runtime_error {
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

struct ParseError : Error {
    ParseError(SourceSpan span, const std::string& message,
               std::vector<std::string> expected = {})
        : Error(message), span(span), expected(std::move(expected)) {}

    SourceSpan span;
    std::vector<std::string> expected;

    /// "line:col: message" — the format used for diagnostics.
    std::string format() const {
        return std::to_string(span.line) + ":" + std::to_string(span.column) +
               ": " + what();
    }
};

/// A single validity violation found by the pattern validator.
struct Violation {
    SourceSpan span;
    std::string message;

    std::string format() const {
        return std::to_string(span.line) + ":" + std::to_string(span.column) +
               ": " + message;
    }
};

}  // namespace gral
