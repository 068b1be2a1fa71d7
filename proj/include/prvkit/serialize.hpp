#pragma once

#include "prvkit/types.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace prvkit {

/// Integer when it fits in 64 bits, decimal string otherwise.
nlohmann::json bigint_to_json(const BigInt& x);
/// Integer when integral, "p/q" string otherwise.
nlohmann::json rational_to_json(const Rational& x);

std::vector<std::vector<std::int64_t>> triple_to_json(const std::vector<CoweightVec>& t);

/// "1,-2,0" -> {1, -2, 0}; throws Error on malformed input.
std::vector<std::int64_t> parse_int_list(std::string_view text);

}  // namespace prvkit
