#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hnp/bundle.hpp"

namespace hnp {

/// Parse failure with the byte offset of the offending input position.
struct ParseError : std::runtime_error {
  std::size_t offset;

  ParseError(std::size_t off, const std::string& message)
      : std::runtime_error(message + " at offset " + std::to_string(off)), offset(off) {}
};

/// Grammar:
///   bundle := "0" | term ("+" term)*
///   term   := "O(" int ["/" posint] ")" ["^" posint]
/// Whitespace between tokens is ignored.  Non-canonical input (unsorted,
/// repeated or unreduced slopes) is canonicalized.
Bundle parse_bundle(std::string_view text);

/// "a/b" when b > 1, bare integer otherwise.
std::string format_slope(const Slope& s);

/// Canonical form in the grammar above; parse(format(b)) == b.
std::string format_bundle(const Bundle& b);

}  // namespace hnp
