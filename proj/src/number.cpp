// Copyright 2026 The stabkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stabkit/number.hpp"

#include <cctype>

namespace stabkit {

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::optional<BigInt> parse_bigint(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return std::nullopt;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  BigInt value;
  if (value.set_str(digits, 10) != 0) return std::nullopt;
  return value;
}

std::optional<Rational> parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto num = parse_bigint(text);
    if (!num) return std::nullopt;
    return Rational(*num);
  }
  auto num = parse_bigint(text.substr(0, slash));
  auto den = parse_bigint(text.substr(slash + 1));
  if (!num || !den || *den == 0 || text[slash + 1] == '-' || text[slash + 1] == '+') {
    return std::nullopt;
  }
  Rational value(*num, *den);
  value.canonicalize();
  return value;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::size_t bit_length(const BigInt& value) {
  if (value == 0) return 1;
  return mpz_sizeinbase(value.get_mpz_t(), 2) + 1;
}

std::size_t bit_length(const Rational& value) {
  return bit_length(value.get_num()) + bit_length(value.get_den());
}

}  // namespace stabkit
