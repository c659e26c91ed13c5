#pragma once

#include "pcorr/matrix.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pcorr {

/// Malformed matrix input. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses either the plain text format
///
///     n
///     a11 a12 ... a1n
///     ...
///
/// or JSON `{"n": int, "entries": [[...], ...]}`; the choice is made from
/// the first non-blank character. JSON entries may be numbers or decimal
/// strings (for values beyond 64 bits).
IntMatrix parse_matrix(std::string_view text);

/// Reads a matrix from `path`, or from stdin when `path` is "-".
IntMatrix read_matrix(const std::string& path);

}  // namespace pcorr
