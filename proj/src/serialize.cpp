#include "prvkit/serialize.hpp"

#include <charconv>
#include <limits>

namespace prvkit {

nlohmann::json bigint_to_json(const BigInt& x) {
  if (x <= std::numeric_limits<std::int64_t>::max() && x >= std::numeric_limits<std::int64_t>::min())
    return static_cast<std::int64_t>(x);
  return x.str();
}

nlohmann::json rational_to_json(const Rational& x) {
  if (denominator(x) == 1) return bigint_to_json(BigInt(numerator(x)));
  return x.str();
}

std::vector<std::vector<std::int64_t>> triple_to_json(const std::vector<CoweightVec>& t) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& y : t) out.push_back(y.to_vector());
  return out;
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '(' || s.front() == '[')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == ')' || s.back() == ']')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw Error("empty integer list");
  for (;;) {
    auto next = text.find(',', pos);
    std::string_view tok = trim(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    std::int64_t v = 0;
    const char* first = tok.data();
    if (!tok.empty() && tok.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw Error("malformed integer list '" + std::string(text) + "'");
    out.push_back(v);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace prvkit
