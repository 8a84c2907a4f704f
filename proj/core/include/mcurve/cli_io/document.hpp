#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mcurve/arrangement/arrangement.hpp"
#include "mcurve/combinatorics.hpp"
#include "mcurve/error.hpp"

namespace mcurve {

/// ParseError carrying a 1-based source position (columns count bytes).
class ParseFailure : public Error {
 public:
  ParseFailure(int line, int column, const std::string& message);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

struct SourceSpan {
  int line = 0;
  int column = 0;
  /// Bytes from the keyword to the last coefficient.
  int length = 0;
};

/// A parsed arrangement file. spans[i] locates global component i (lines
/// first, then conics, each group in file order).
struct ArrangementDocument {
  std::string source;
  Arrangement arrangement;
  std::vector<SourceSpan> spans;
};

/// Grammar, one statement per line:
///   line: a b c            a x + b y + c z
///   conic: a b c d e f     a x^2 + b y^2 + c z^2 + d xy + e xz + f yz
/// Coefficients are integers or p/q with an optional sign. `#` starts a
/// comment; blank lines are ignored. Semantic checks are left to validate.
ArrangementDocument parse_arrangement(std::string_view text);

/// Coefficients in file order: (a, b, c) for lines, (a, b, c, d, e, f) for
/// conics.
std::vector<Rational> file_coefficients(const HForm& component);

/// Canonical text: all lines, then all conics, coefficients in lowest terms.
std::string serialize_arrangement(const Arrangement& arr);

/// Parses "d,k;n2,n3,..." (whitespace around tokens allowed) and checks the
/// type invariants. Throws ParseFailure, NegativeCount or InvalidArgument.
WeakCombinatorics parse_wc(std::string_view text);

/// FNV-1a 64-bit digest of the text as 16 lowercase hex digits.
std::string digest(std::string_view text);

}  // namespace mcurve
