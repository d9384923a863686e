#pragma once

#include <stdexcept>
#include <string>

namespace lpa {

/// Semantic errors: unknown identifiers, mismatched graphs/rings, violated
/// preconditions. Carries a plain message.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Errors raised while parsing text inputs (graph files, expressions,
/// certificates, delay vectors). Cites line and column.
struct ParseError : Error {
  int line;
  int column;
  ParseError(int line_, int column_, const std::string& what_)
      : Error("parse error at " + std::to_string(line_) + ":" +
              std::to_string(column_) + ": " + what_),
        line(line_),
        column(column_) {}
};

}  // namespace lpa
