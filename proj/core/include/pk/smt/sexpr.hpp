#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pk::smt {

/// Minimal S-expression: an atom (symbols, numerals, keywords, strings) or a
/// list. Quoted symbols `|...|` are stored without the bars.
struct SExpr {
  bool is_list = false;
  std::string atom;
  std::vector<SExpr> items;

  bool is_atom(std::string_view text) const { return !is_list && atom == text; }
  std::string to_string() const;
};

/// Incremental reader over a character stream. Skips whitespace and `;`
/// comments between expressions.
class SExprReader {
 public:
  void feed(std::string_view chunk) { buffer_.append(chunk); }
  /// The next complete expression, or nullopt if more input is needed.
  /// Throws std::runtime_error on malformed input (unbalanced `)`).
  std::optional<SExpr> next();
  bool empty() const;
  void clear() { buffer_.clear(); }

 private:
  std::string buffer_;
};

/// Parses exactly one expression; throws std::runtime_error otherwise.
SExpr parse_sexpr(std::string_view text);

}  // namespace pk::smt
