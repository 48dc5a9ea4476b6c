#include "pk/smt/sexpr.hpp"

#include <cctype>
#include <stdexcept>

namespace pk::smt {

std::string SExpr::to_string() const
{
  if (!is_list) return atom;
  std::string out = "(";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ' ';
    out += items[i].to_string();
  }
  return out + ")";
}

namespace {

bool space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::size_t skip_blank(std::string_view s, std::size_t i)
{
  while (i < s.size()) {
    if (space(s[i])) {
      ++i;
    } else if (s[i] == ';') {
      while (i < s.size() && s[i] != '\n') ++i;
    } else {
      break;
    }
  }
  return i;
}

// Parses one expression starting at i. Returns false if the input ends
// before the expression is complete.
bool parse_at(std::string_view s, std::size_t& i, SExpr& out)
{
  i = skip_blank(s, i);
  if (i >= s.size()) return false;
  char c = s[i];
  if (c == ')') throw std::runtime_error("unbalanced ')' in solver output");
  if (c == '(') {
    ++i;
    out.is_list = true;
    while (true) {
      i = skip_blank(s, i);
      if (i >= s.size()) return false;
      if (s[i] == ')') {
        ++i;
        return true;
      }
      SExpr item;
      if (!parse_at(s, i, item)) return false;
      out.items.push_back(std::move(item));
    }
  }
  if (c == '|') {
    auto end = s.find('|', i + 1);
    if (end == std::string_view::npos) return false;
    out.atom = std::string(s.substr(i + 1, end - i - 1));
    i = end + 1;
    return true;
  }
  if (c == '"') {
    std::size_t j = i + 1;
    std::string text = "\"";
    while (true) {
      if (j >= s.size()) return false;
      if (s[j] == '"') {
        if (j + 1 >= s.size()) return false;
        if (s[j + 1] == '"') {
          text += "\"\"";
          j += 2;
          continue;
        }
        break;
      }
      text += s[j++];
    }
    out.atom = text + "\"";
    i = j + 1;
    return true;
  }
  std::size_t j = i;
  while (j < s.size() && !space(s[j]) && s[j] != '(' && s[j] != ')' && s[j] != ';') ++j;
  // An atom running to the end of the buffer may continue in the next chunk.
  if (j >= s.size()) return false;
  out.atom = std::string(s.substr(i, j - i));
  i = j;
  return true;
}

}  // namespace

std::optional<SExpr> SExprReader::next()
{
  std::size_t i = 0;
  SExpr e;
  if (!parse_at(buffer_, i, e)) return std::nullopt;
  buffer_.erase(0, i);
  return e;
}

bool SExprReader::empty() const { return skip_blank(buffer_, 0) >= buffer_.size(); }

SExpr parse_sexpr(std::string_view text)
{
  std::string padded(text);
  padded += '\n';
  std::size_t i = 0;
  SExpr e;
  if (!parse_at(padded, i, e)) throw std::runtime_error("incomplete s-expression");
  if (skip_blank(padded, i) != padded.size()) throw std::runtime_error("trailing input after s-expression");
  return e;
}

}  // namespace pk::smt
