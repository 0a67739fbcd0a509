#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semibetti/error.hpp"

namespace semibetti::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kNotApplicable = 3,
};

/// "6,10,11" -> {6, 10, 11}. Whitespace around entries is ignored.
/// Throws Error(InvalidGenerator) on anything that is not a positive integer.
std::vector<Int> parse_generators(std::string_view text);

struct BatchLine {
  std::size_t line_number;
  std::string text;  // the line as written, comment stripped
  std::vector<Int> generators;
  std::optional<Int> f;
  std::optional<std::string> parse_error;
};

/// One semigroup per line, comma-separated generators, optional ";f=N",
/// '#' starts a comment, blank lines are skipped.
std::vector<BatchLine> parse_batch(std::istream& in);

/// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semibetti::cli
