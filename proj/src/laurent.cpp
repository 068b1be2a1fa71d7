#include "prvkit/laurent.hpp"

#include <cctype>

namespace prvkit {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip();
    return i_ >= s_.size();
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  std::int64_t integer() {
    skip();
    std::size_t start = i_;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
    std::size_t digits = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (digits == i_) fail("expected an integer");
    return std::stoll(std::string(s_.substr(start, i_ - start)));
  }
  bool at_digit() {
    skip();
    return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("cannot parse Laurent polynomial '" + std::string(s_) + "': " + what);
  }
  std::size_t pos() const { return i_; }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

// term := [coef ['*']] 't' ['^' int] | coef
Laurent parse_term(Cursor& c, bool negative) {
  Rational coef = 1;
  bool have_coef = false;
  if (c.at_digit()) {
    const std::int64_t num = c.integer();
    std::int64_t den = 1;
    if (c.eat('/')) den = c.integer();
    if (den == 0) c.fail("zero denominator");
    coef = Rational(num, den);
    have_coef = true;
    c.eat('*');
  }
  int exp = 0;
  if (c.eat('t')) {
    exp = 1;
    if (c.eat('^')) {
      if (c.eat('(')) {
        exp = static_cast<int>(c.integer());
        if (!c.eat(')')) c.fail("expected ')'");
      } else {
        exp = static_cast<int>(c.integer());
      }
    }
  } else if (!have_coef) {
    c.fail("expected a coefficient or t");
  }
  if (negative) coef = -coef;
  return Laurent::monomial(coef, exp);
}

}  // namespace

Laurent parse_laurent(std::string_view text) {
  Cursor c(text);
  Laurent out;
  bool negative = c.eat('-');
  if (!negative) c.eat('+');
  out += parse_term(c, negative);
  while (!c.done()) {
    if (c.eat('+'))
      negative = false;
    else if (c.eat('-'))
      negative = true;
    else
      c.fail("expected '+' or '-'");
    out += parse_term(c, negative);
  }
  return out;
}

std::string to_string(const Laurent& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    Rational c = p.coeffs()[i];
    if (c == 0) continue;
    const int k = p.low() + static_cast<int>(i);
    const bool neg = c < 0;
    if (neg) c = -c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    std::string mono;
    if (k == 1)
      mono = "t";
    else if (k != 0)
      mono = "t^" + std::to_string(k);
    if (mono.empty())
      s += c.str();
    else if (c == 1)
      s += mono;
    else
      s += c.str() + "*" + mono;
  }
  return s;
}

LaurentMatrix parse_laurent_matrix(std::string_view text) {
  auto fail = [&](const std::string& what) -> void {
    throw Error("cannot parse Laurent matrix '" + std::string(text) + "': " + what);
  };
  std::vector<std::vector<std::string>> rows;
  int depth = 0;
  std::string cur;
  for (char ch : text) {
    if (ch == '[') {
      ++depth;
      if (depth == 2) rows.emplace_back();
      if (depth > 2) fail("too many brackets");
      continue;
    }
    if (ch == ']') {
      if (depth == 2) {
        rows.back().push_back(cur);
        cur.clear();
      }
      --depth;
      if (depth < 0) fail("unbalanced brackets");
      continue;
    }
    if (depth == 2) {
      if (ch == ',') {
        rows.back().push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    } else if (!std::isspace(static_cast<unsigned char>(ch)) && ch != ',') {
      fail("unexpected character outside rows");
    }
  }
  if (depth != 0) fail("unbalanced brackets");
  const int m = static_cast<int>(rows.size());
  if (m == 0) fail("empty matrix");
  LaurentMatrix a(m);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m) fail("matrix is not square");
    for (int j = 0; j < m; ++j) a(i, j) = parse_laurent(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return a;
}

std::string to_string(const LaurentMatrix& a) {
  std::string s = "[";
  for (int i = 0; i < a.size(); ++i) {
    if (i) s += ", ";
    s += "[";
    for (int j = 0; j < a.size(); ++j) {
      if (j) s += ", ";
      s += to_string(a(i, j));
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace prvkit
