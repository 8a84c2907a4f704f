#include "mcurve/cli_io/document.hpp"

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>

namespace mcurve {

ParseFailure::ParseFailure(int line, int column, const std::string& message)
    : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                       message),
      line_(line),
      column_(column) {}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

struct Token {
  std::string_view text;
  int column = 0;  // 1-based
};

std::vector<Token> split_tokens(std::string_view s, int first_column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    if (i == s.size()) break;
    const std::size_t start = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    out.push_back({s.substr(start, i - start), first_column + static_cast<int>(start)});
  }
  return out;
}

// [+-]?digits(/digits)? with a nonzero denominator.
Rational parse_coefficient(const Token& tok, int line) {
  const std::string_view t = tok.text;
  std::size_t i = 0;
  if (i < t.size() && (t[i] == '+' || t[i] == '-')) ++i;
  const std::size_t num_start = i;
  while (i < t.size() && is_digit(t[i])) ++i;
  if (i == num_start) throw ParseFailure(line, tok.column + static_cast<int>(i), "expected a digit in coefficient '" + std::string(t) + "'");
  const std::size_t num_end = i;
  std::optional<std::string_view> den;
  if (i < t.size() && t[i] == '/') {
    ++i;
    const std::size_t den_start = i;
    while (i < t.size() && is_digit(t[i])) ++i;
    if (i == den_start) throw ParseFailure(line, tok.column + static_cast<int>(i), "expected a denominator in '" + std::string(t) + "'");
    den = t.substr(den_start, i - den_start);
  }
  if (i != t.size()) throw ParseFailure(line, tok.column + static_cast<int>(i), "unexpected character in coefficient '" + std::string(t) + "'");
  Integer num(std::string(t.substr(num_start, num_end - num_start)));
  if (t[0] == '-') num = -num;
  if (!den) return Rational(num);
  const Integer q{std::string(*den)};
  if (q == 0) throw ParseFailure(line, tok.column, "zero denominator in '" + std::string(t) + "'");
  return make_rational(num, q);
}

}  // namespace

ArrangementDocument parse_arrangement(std::string_view text) {
  ArrangementDocument doc;
  doc.source = std::string(text);
  std::vector<HForm> lines, conics;
  std::vector<SourceSpan> line_spans, conic_spans;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    const std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t start = 0;
    while (start < raw.size() && is_space(raw[start])) ++start;
    if (start == raw.size()) continue;
    std::size_t end = raw.size();
    while (end > start && is_space(raw[end - 1])) --end;

    std::size_t i = start;
    while (i < end && std::isalpha(static_cast<unsigned char>(raw[i]))) ++i;
    const std::string_view keyword = raw.substr(start, i - start);
    const int keyword_col = static_cast<int>(start) + 1;
    if (keyword != "line" && keyword != "conic") {
      throw ParseFailure(line_no, keyword_col, "expected 'line:' or 'conic:'");
    }
    while (i < end && is_space(raw[i])) ++i;
    if (i == end || raw[i] != ':') throw ParseFailure(line_no, static_cast<int>(i) + 1, "expected ':' after '" + std::string(keyword) + "'");
    ++i;

    const auto tokens = split_tokens(raw.substr(i, end - i), static_cast<int>(i) + 1);
    const std::size_t expected = keyword == "line" ? 3 : 6;
    if (tokens.size() != expected) {
      const int col = tokens.size() > expected ? tokens[expected].column : static_cast<int>(end) + 1;
      throw ParseFailure(line_no, col, std::string(keyword) + " takes " + std::to_string(expected) + " coefficients, got " +
                                           std::to_string(tokens.size()));
    }
    std::vector<Rational> c;
    for (const auto& tok : tokens) c.push_back(parse_coefficient(tok, line_no));
    const SourceSpan span{line_no, keyword_col, static_cast<int>(end - start)};
    if (expected == 3) {
      lines.push_back(HForm::linear(c[0], c[1], c[2]));
      line_spans.push_back(span);
    } else {
      conics.push_back(HForm::conic(c[0], c[1], c[2], c[3], c[4], c[5]));
      conic_spans.push_back(span);
    }
  }
  doc.spans = line_spans;
  doc.spans.insert(doc.spans.end(), conic_spans.begin(), conic_spans.end());
  doc.arrangement = Arrangement(std::move(lines), std::move(conics));
  return doc;
}

std::vector<Rational> file_coefficients(const HForm& component) {
  static const std::vector<Exponent> line_order{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  static const std::vector<Exponent> conic_order{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  std::vector<Rational> out;
  for (const auto& e : component.degree() == 1 ? line_order : conic_order) out.push_back(component.coefficient(e));
  return out;
}

std::string serialize_arrangement(const Arrangement& arr) {
  std::ostringstream os;
  auto emit = [&os](const char* keyword, const HForm& f) {
    os << keyword;
    for (const auto& c : file_coefficients(f)) os << ' ' << c.get_str();
    os << '\n';
  };
  for (const auto& l : arr.lines()) emit("line:", l);
  for (const auto& q : arr.conics()) emit("conic:", q);
  return os.str();
}

WeakCombinatorics parse_wc(std::string_view text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && is_space(text[i])) ++i;
  };
  auto col = [&] { return static_cast<int>(i) + 1; };
  auto number = [&]() -> long {
    skip();
    const int start_col = col();
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
    const std::size_t digits = i;
    long v = 0;
    while (i < text.size() && is_digit(text[i])) {
      const int digit = text[i] - '0';
      if (v > (std::numeric_limits<long>::max() - digit) / 10) throw ParseFailure(1, start_col, "number out of range");
      v = v * 10 + digit;
      ++i;
    }
    if (i == digits) throw ParseFailure(1, col(), "expected an integer");
    skip();
    return neg ? -v : v;
  };
  auto expect = [&](char c) {
    if (i >= text.size() || text[i] != c) throw ParseFailure(1, col(), std::string("expected '") + c + "'");
    ++i;
  };

  WeakCombinatorics wc;
  const long d = number();
  expect(',');
  const long k = number();
  expect(';');
  if (d > std::numeric_limits<int>::max() || k > std::numeric_limits<int>::max()) {
    throw ParseFailure(1, 1, "component counts out of range");
  }
  wc.d = static_cast<int>(d);
  wc.k = static_cast<int>(k);
  skip();
  int r = 2;
  if (i < text.size()) {
    while (true) {
      wc.counts[r++] = number();
      if (i == text.size()) break;
      expect(',');
    }
  }
  if (wc.d < 0 || wc.k < 0) throw Error(ErrorKind::NegativeCount, "component counts must be nonnegative");
  wc.check();
  return wc;
}

std::string digest(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace mcurve
